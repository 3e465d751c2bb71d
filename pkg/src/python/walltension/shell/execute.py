"""
Execute module
"""

from multiprocessing.pool import ThreadPool


class Execute:
    """
    Supports sequential and multithreaded execution of tasks. numpy releases the GIL inside its kernels, so vectorized
    element chunks scale across threads.
    """

    def __init__(self, workers=None):
        """
        Creates a new execute instance. Once created, the thread pool stays open until the close method is called.

        Args:
            workers: number of worker threads, None uses one per CPU
        """

        self.workers = workers
        self.thread = None

    def __del__(self):
        self.close()

    def __enter__(self):
        return self

    def __exit__(self, etype, value, traceback):
        self.close()

    def run(self, method, function, args, ordered=True):
        """
        Runs multiple calls of function for each tuple in args. The method parameter controls if the calls are
        sequential (method = None) or multithreaded (method = "thread").

        Args:
            method: run method - "thread" for multithreading, otherwise runs sequentially
            function: function to run
            args: list of tuples with arguments to each call
            ordered: if True, results are returned in submission order, otherwise in completion order

        Returns:
            list of results
        """

        # Concurrent processing
        if method and len(args) > 1:
            pool = self.pool(method)
            if pool:
                if ordered:
                    return pool.starmap(function, args, 1)

                return list(pool.imap_unordered(Execute.unpack(function), args, 1))

        # Sequential processing
        return [function(*arg) for arg in args]

    def pool(self, method):
        """
        Gets a handle to a concurrent processing pool. This method will create the pool if it doesn't already exist.

        Args:
            method: pool type - "thread"

        Returns:
            concurrent processing pool or None if no pool of that type available
        """

        if method == "thread":
            if not self.thread:
                self.thread = ThreadPool(self.workers)

            return self.thread

        return None

    def close(self):
        """
        Closes concurrent processing pools.
        """

        if hasattr(self, "thread") and self.thread:
            self.thread.close()
            self.thread.join()

        self.thread = None

    @staticmethod
    def unpack(function):
        """
        Wraps function to accept a single argument tuple.

        Args:
            function: function to wrap

        Returns:
            wrapped function
        """

        def call(args):
            return function(*args)

        return call
