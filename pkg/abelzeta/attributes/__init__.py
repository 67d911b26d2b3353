from .attributes import UNDEFINED, Attribute, AttributeClass

__all__ = [
    UNDEFINED,
    Attribute,
    AttributeClass,
]
