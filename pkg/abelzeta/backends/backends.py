"""
Defines the base API for the task calculation backends.
"""
import abc
import logging
from concurrent.futures import Future

from abelzeta.utils.exceptions import AbelZetaException

logger = logging.getLogger(__name__)


class ComputeResources:
    """The threads given to each worker of a backend."""

    def __init__(self, number_of_threads=1):
        assert number_of_threads > 0
        self._number_of_threads = number_of_threads

    @property
    def number_of_threads(self):
        """int: The threads available to one worker."""
        return self._number_of_threads

    def __repr__(self):
        return f"ComputeResources(number_of_threads={self._number_of_threads})"

    def __eq__(self, other):
        return (
            type(other) == ComputeResources
            and other.number_of_threads == self.number_of_threads
        )

    def __ne__(self, other):
        return not self == other


def run_task(function, *args, **kwargs):
    """Calls `function`, converting an uncaught exception into a returned
    :class:`AbelZetaException` so that one failing cover does not abort the
    whole batch. A `spec` keyword argument is attached to the exception.

    Returns
    -------
    Any
        The return value of `function`, or the wrapped exception.
    """
    try:
        return function(*args, **kwargs)

    except Exception as e:

        spec = kwargs.get("spec")
        logger.warning(f"A task failed{'' if spec is None else f' on {spec}'}: {e}")

        return AbelZetaException.from_exception(
            e, spec=None if spec is None else str(spec)
        )


class CalculationBackend(abc.ABC):
    """Distributes the independent tasks of a sweep, an oracle run or a
    place count over workers.

    A backend is a context manager which is started on entry and stopped
    on exit. Every task result, including a failure wrapped by
    :func:`run_task`, is delivered through a future, and callers merge
    results in submission order.
    """

    def __init__(self, number_of_workers=1, resources_per_worker=None):
        """
        Parameters
        ----------
        number_of_workers : int
            How many tasks may run at once.
        resources_per_worker: ComputeResources, optional
            The threads of each worker, one by default.
        """
        self._number_of_workers = number_of_workers
        self._resources_per_worker = (
            ComputeResources() if resources_per_worker is None else resources_per_worker
        )
        self._started = False

    @property
    def started(self):
        """bool: Whether :meth:`start` has been called without a matching
        :meth:`stop`."""
        return self._started

    def start(self):
        """Marks the backend as started. Subclasses acquire their workers
        after calling this."""
        if self._started:
            raise RuntimeError("The backend has already been started.")

        self._started = True

    @abc.abstractmethod
    def stop(self):
        """Releases the workers."""
        raise NotImplementedError()

    @abc.abstractmethod
    def submit_task(self, function, *args, **kwargs):
        """Schedules `function(*args, **kwargs)` through :func:`run_task`.

        Returns
        -------
        Future
            Resolves to the result, or to an :class:`AbelZetaException`.
        """
        raise NotImplementedError()

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *args):
        self.stop()


class InlineBackend(CalculationBackend):
    """A backend which runs each task immediately in the calling thread,
    used when only a single thread is requested."""

    def stop(self):
        self._started = False

    def submit_task(self, function, *args, **kwargs):

        kwargs.pop("key", None)

        future = Future()
        future.set_result(run_task(function, *args, **kwargs))

        return future


def create_backend(number_of_threads=1):
    """Creates the backend for a number of worker threads: inline for a
    single thread, otherwise a threaded dask `LocalCluster`.

    Returns
    -------
    CalculationBackend
    """
    if number_of_threads < 1:
        raise ValueError(f"At least one thread is required, not {number_of_threads}.")

    if number_of_threads == 1:
        return InlineBackend()

    from abelzeta.backends.dask import DaskLocalCluster

    return DaskLocalCluster(number_of_threads)
