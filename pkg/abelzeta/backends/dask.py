"""
A compute backend which uses dask as the distribution engine.
"""
import logging
import multiprocessing

from dask import distributed

from abelzeta.backends.backends import CalculationBackend, run_task

logger = logging.getLogger(__name__)


class DaskLocalCluster(CalculationBackend):
    """A backend which runs sweep rows, oracle draws or place counts of
    different degrees on a threaded `dask` `LocalCluster`.

    Threads rather than processes are used, so that the memoized finite
    field contexts are shared between the tasks.

    See Also
    --------
    dask.distributed.LocalCluster
    """

    def __init__(self, number_of_workers=1, resources_per_worker=None):
        """Constructs a new DaskLocalCluster.

        Parameters
        ----------
        number_of_workers: int
            The number of dask workers.
        resources_per_worker: ComputeResources, optional
            The threads available to each worker, one by default.
        """
        super(DaskLocalCluster, self).__init__(number_of_workers, resources_per_worker)

        self._cluster = None
        self._client = None

        maximum_threads = multiprocessing.cpu_count()
        requested_threads = (
            number_of_workers * self._resources_per_worker.number_of_threads
        )

        if requested_threads > maximum_threads:

            logger.warning(
                f"{requested_threads} threads were requested but only "
                f"{maximum_threads} are available."
            )

    def start(self):

        super(DaskLocalCluster, self).start()

        self._cluster = distributed.LocalCluster(
            self._number_of_workers,
            self._resources_per_worker.number_of_threads,
            processes=False,
            dashboard_address=None,
        )
        self._client = distributed.Client(self._cluster)

        logger.debug(f"Started a dask cluster of {self._number_of_workers} workers.")

    def stop(self):

        if self._client is not None:
            self._client.close()
        if self._cluster is not None:
            self._cluster.close()

        self._client = None
        self._cluster = None
        self._started = False

    def submit_task(self, function, *args, **kwargs):
        """Submits a task to the cluster. An uncaught exception raised by
        the task is returned as an :class:`AbelZetaException` by the future.

        Parameters
        ----------
        function: function
            The function to run.
        args, kwargs: Any
            The arguments of the function. An optional ``key`` names the
            task.

        Returns
        -------
        distributed.Future
        """
        key = kwargs.pop("key", None)

        return self._client.submit(
            run_task, function, *args, **kwargs, key=key, pure=False
        )
