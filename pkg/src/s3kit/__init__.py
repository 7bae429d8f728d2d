"""s3kit: feature queries, metadata analysis, and retrieval-augmented
question answering for large scientific codebases."""

__version__ = "0.1.0"
