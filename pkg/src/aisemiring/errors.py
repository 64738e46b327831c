class SizeLimitError(Exception):
    """An operation refused to run because a configured size cap was exceeded."""
