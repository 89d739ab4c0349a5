"""Credibility appraisal toolkit for webpages shared on social media.

Pipeline stages: corpus ingestion and filtering, TF-IDF features,
per-criterion SVM/random-forest classifiers with an ensemble scorer,
agreement and term-significance statistics, and potential-exposure /
follower-network analysis.  See the CLI (``webcred --help``) for the
batch entry points.
"""

__version__ = "0.1.0"
