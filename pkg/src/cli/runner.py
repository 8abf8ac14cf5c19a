# src/cli/runner.py
"""Corpus evaluation, inline or across a process pool"""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence

from src.core.config import ParallelConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _apply_chunk(fn: Callable[[Any], Any], chunk: Sequence[Any]) -> List[Any]:
    return [fn(item) for item in chunk]


class CorpusRunner:
    """Maps a picklable case function over a corpus; results keep corpus order"""

    def __init__(self, config: ParallelConfig):
        self.max_parallelism = config.max_parallelism
        self.chunk_size = max(1, config.chunk_size)

    def run(self, fn: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        items = list(items)
        if self.max_parallelism <= 1 or len(items) <= self.chunk_size:
            return _apply_chunk(fn, items)
        return asyncio.run(self._run_parallel(fn, items))

    async def _run_parallel(self, fn: Callable[[Any], Any], items: List[Any]) -> List[Any]:
        chunks = [items[i:i + self.chunk_size] for i in range(0, len(items), self.chunk_size)]
        logger.debug(f"Evaluating {len(items)} cases in {len(chunks)} chunks "
                     f"on {self.max_parallelism} workers")
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.max_parallelism) as pool:
            futures = [loop.run_in_executor(pool, _apply_chunk, fn, chunk) for chunk in chunks]
            results = await asyncio.gather(*futures)
        return [result for chunk in results for result in chunk]
