"""Rendering for the catcollapse figure CSVs."""

from .render import FigureSpec, RenderResult, SchemaError, load_table, render

__all__ = ["FigureSpec", "RenderResult", "SchemaError", "load_table", "render"]
