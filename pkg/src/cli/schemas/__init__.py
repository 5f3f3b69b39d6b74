from .element_schema import ElementSchema, JsonModel, TermSchema, rational_text
from .verdict_schema import VerdictSchema
from .descriptor_schema import (
    DescriptorDocument,
    DescriptorSchema,
    descriptor_document,
    dump_descriptor,
    load_descriptor,
    read_descriptor_document,
)
from .outputs import (
    AlmostAddOutput,
    ApplyOutput,
    AutoOutput,
    CmpOutput,
    DivmodOutput,
    ElementOutput,
    EmbedOutput,
    ErrorOutput,
    SequenceOutput,
    ValidationOutput,
)
from .suite_schema import SuiteReport, SuiteSummary

__all__ = [
    "AlmostAddOutput",
    "ApplyOutput",
    "AutoOutput",
    "CmpOutput",
    "DescriptorDocument",
    "DescriptorSchema",
    "DivmodOutput",
    "ElementOutput",
    "ElementSchema",
    "EmbedOutput",
    "ErrorOutput",
    "JsonModel",
    "SequenceOutput",
    "SuiteReport",
    "SuiteSummary",
    "TermSchema",
    "ValidationOutput",
    "VerdictSchema",
    "descriptor_document",
    "dump_descriptor",
    "load_descriptor",
    "rational_text",
    "read_descriptor_document",
]
