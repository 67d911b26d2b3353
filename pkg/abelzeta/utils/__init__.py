from .utils import check_budget, get_data_filename, setup_timestamp_logging

__all__ = [
    check_budget,
    get_data_filename,
    setup_timestamp_logging,
]
