"""Color-coding tree template counting."""

try:
    from ._subcount import *  # noqa: F401,F403  (installed wheel layout)
    from . import _subcount as _impl
except ImportError:  # in-tree build: extension lives on sys.path directly
    from _subcount import *  # noqa: F401,F403
    import _subcount as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
