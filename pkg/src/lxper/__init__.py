"""Curriculum-calibrated readability assessment: features, selection, regression, baselines."""
from .corpus import (
    CorpusError, EasyWordList, GradedText, GradedTextCorpus, GradedWordList,
    load_easy_words, load_text_corpus, load_word_list, split_corpus, summarize_corpus,
)
from .features import FEATURE_CODES, FeatureVector, extract_all, load_relations
from .model import RegressionModel, load_model, predict, save_model, train
from .textproc import AnalyzedText, annotate

__all__ = [
    "AnalyzedText", "CorpusError", "EasyWordList", "FEATURE_CODES", "FeatureVector",
    "GradedText", "GradedTextCorpus", "GradedWordList", "RegressionModel", "annotate",
    "extract_all", "load_easy_words", "load_model", "load_relations", "load_text_corpus",
    "load_word_list", "predict", "save_model", "split_corpus", "summarize_corpus", "train",
]
