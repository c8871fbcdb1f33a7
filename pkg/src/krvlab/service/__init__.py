"""HTTP service: pydantic models, handlers and the FastAPI app."""

from .app import app

__all__ = ["app"]
