"""Dynamic forests on top trees."""
from .engine import TopTreeForest, ClusterCallbacks
from .forest import Forest
from . import errors

__all__ = ["TopTreeForest", "ClusterCallbacks", "Forest", "errors"]
