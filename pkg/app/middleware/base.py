# app/middleware/base.py
from typing import Any, Callable

import click

CallNext = Callable[[click.Context], Any]


class CommandMiddleware:
    """Wraps the invocation of a command group; subclasses override dispatch"""

    def __init__(self, app: CallNext):
        self.app = app

    def __call__(self, ctx: click.Context) -> Any:
        return self.dispatch(ctx, self.app)

    def dispatch(self, ctx: click.Context, call_next: CallNext) -> Any:
        return call_next(ctx)


class MiddlewareGroup(click.Group):
    """click.Group whose invoke runs through a middleware stack, last added outermost"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.middleware = []

    def add_middleware(self, middleware_class: type, **options) -> None:
        self.middleware.append((middleware_class, options))

    def invoke(self, ctx: click.Context) -> Any:
        app: CallNext = super().invoke
        for middleware_class, options in self.middleware:
            app = middleware_class(app, **options)
        return app(ctx)
