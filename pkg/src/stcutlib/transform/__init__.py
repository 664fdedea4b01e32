from .transformed import TransformedGraph
from .bridge_transform import BridgeTransform, bridge_transform
from .split_transform import SplitTransform, split_transform

__all__ = [
    "TransformedGraph",
    "BridgeTransform",
    "bridge_transform",
    "SplitTransform",
    "split_transform",
]
