"""HTTP service layer; the ASGI application lives at tanglekit.service.app:app."""

from .app import create_app

__all__ = ["create_app"]
