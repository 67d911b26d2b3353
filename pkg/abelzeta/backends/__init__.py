from .backends import (
    CalculationBackend,
    ComputeResources,
    InlineBackend,
    create_backend,
    run_task,
)

__all__ = [
    CalculationBackend,
    ComputeResources,
    InlineBackend,
    create_backend,
    run_task,
]
