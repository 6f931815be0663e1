import asyncio
from concurrent.futures import Executor
from functools import partial
from typing import Callable, Awaitable, Any, TypeVar, Optional

T = TypeVar('T')


def run_sync_in_executor(func: Callable[..., T], *args, executor: Optional[Executor] = None, **kwargs) -> Awaitable[T]:
    loop = asyncio.get_event_loop()
    if kwargs:
        func = partial(func, **kwargs)
    return loop.run_in_executor(executor, func, *args)
