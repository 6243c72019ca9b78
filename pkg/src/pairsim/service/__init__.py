"""HTTP service layer: FastAPI app and pydantic schemas."""

from .app import create_app

__all__ = ["create_app"]
