"""Synchronous client for the service, in-process or over the network.

With no server URL the client mounts the FastAPI app on an in-process
ASGI transport, so the CLI works with zero setup; pointing it at a URL
sends identical requests to a remote instance.
"""

from __future__ import annotations

import asyncio
from typing import Any

import httpx


class ServiceCallError(Exception):
    """Non-2xx service response, carrying the structured error payload."""

    def __init__(self, status: int, payload: dict[str, Any]):
        self.status = status
        error = payload.get("error")
        if isinstance(error, dict):
            self.error_type = error.get("type", "Error")
            self.message = error.get("message", "")
            self.fields = {
                k: v
                for k, v in error.items()
                if k not in ("type", "message") and v is not None
            }
        else:
            # FastAPI request-validation shape: {"detail": [...]}
            self.error_type = "RequestValidationError"
            detail = payload.get("detail")
            self.message = str(detail) if detail is not None else str(payload)
            self.fields = {}
        super().__init__(f"{self.error_type}: {self.message}")

    @property
    def is_blowup(self) -> bool:
        return self.error_type == "BlowupError"


class ServiceClient:
    """POST JSON to service routes and return parsed response bodies."""

    def __init__(self, server: str | None = None, timeout: float | None = 600.0):
        self._server = server
        self._timeout = timeout
        self._client: httpx.Client | None = None
        self._app = None
        if server:
            self._client = httpx.Client(base_url=server, timeout=timeout)
        else:
            from .service import create_app

            self._app = create_app()

    def close(self) -> None:
        if self._client is not None:
            self._client.close()

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def _request(self, method: str, path: str, payload: dict[str, Any] | None) -> httpx.Response:
        if self._client is not None:
            return self._client.request(method, path, json=payload)

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://orbimap.internal", timeout=self._timeout
            ) as client:
                return await client.request(method, path, json=payload)

        return asyncio.run(go())

    def call(self, path: str, payload: dict[str, Any] | None = None, method: str = "POST") -> dict[str, Any]:
        response = self._request(method, path, payload)
        try:
            body = response.json()
        except ValueError:
            body = {"error": {"type": "BadResponse", "message": response.text[:200]}}
        if response.status_code >= 400:
            raise ServiceCallError(response.status_code, body)
        return body

    def health(self) -> dict[str, Any]:
        return self.call("/health", None, method="GET")
