import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from tqdm import tqdm

from .config import Settings, get_settings
from .errors import ResourceBoundError

logger = logging.getLogger(__name__)

BOUNDS = {
    'group_size': 'max_group_size',
    'oracle_ops': 'max_oracle_ops',
    'coxeter_rank': 'max_coxeter_rank',
    'fiber_n': 'max_fiber_n',
}


class BaseService:
    _cache: Dict[str, Any] = {}
    service_name = 'base'

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @property
    def cache_prefix(self) -> str:
        return f"{self.service_name}_"

    def get_cached_data(self, key: str) -> Optional[Any]:
        data = self._cache.get(f"{self.cache_prefix}{key}")
        if data is not None:
            logger.debug(f"Cache hit for {self.cache_prefix}{key}")
        return data

    def set_cached_data(self, key: str, data: Any) -> Any:
        self._cache[f"{self.cache_prefix}{key}"] = data
        return data

    def cached(self, key: str, compute: Callable[[], Any]) -> Any:
        data = self.get_cached_data(key)
        if data is None:
            data = self.set_cached_data(key, compute())
        return data

    def invalidate_cache(self, key: Optional[str] = None) -> None:
        """Invalidate one entry or every entry of this service"""
        if key:
            self._cache.pop(f"{self.cache_prefix}{key}", None)
        else:
            keys_to_remove = [k for k in self._cache if k.startswith(self.cache_prefix)]
            for k in keys_to_remove:
                self._cache.pop(k, None)

    def check_bound(self, bound: str, requested: int) -> None:
        """Raise ResourceBoundError when a sweep would exceed its configured bound"""
        limit = getattr(self.settings, BOUNDS[bound])
        if requested > limit:
            logger.error(f"Error in {self.service_name}: {bound} {requested} exceeds {limit}")
            raise ResourceBoundError(bound, requested, limit)
        logger.debug(f"Bound {bound}: {requested} <= {limit}")

    def log_run(self, operation: str, status: str, metadata: Optional[dict] = None) -> None:
        logger.info(f"{self.service_name}.{operation} {status} {metadata or {}}")

    def progress(self, iterable: Iterable, total: Optional[int] = None, desc: str = '') -> Iterable:
        if not self.settings.progress:
            return iterable
        return tqdm(iterable, total=total, desc=desc, leave=False)

    def map_chunks(self, func: Callable, chunks: Sequence, desc: str = '') -> List[Any]:
        """Apply a picklable function to every chunk, across worker processes when threads > 1"""
        workers = min(self.settings.threads, len(chunks))
        if workers <= 1:
            return [func(chunk) for chunk in self.progress(chunks, len(chunks), desc)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(self.progress(executor.map(func, chunks), len(chunks), desc))
