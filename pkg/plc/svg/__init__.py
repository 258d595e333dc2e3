class EmptyViewport(Exception):
    pass
