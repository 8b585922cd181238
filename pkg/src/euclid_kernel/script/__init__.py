"""The construction-script language: parser, printer, interpreter, probe."""

from .args import ArgsError, parse_args, parse_point
from .ast import Binding, Call, Name, Param, Script
from .corpus import CORPUS_SCRIPTS, corpus_path, load_corpus, load_script
from .interpreter import EvalResult, evaluate, value_to_dict
from .parser import ParseError, parse
from .printer import pretty_print

__all__ = [
    "ArgsError", "Binding", "CORPUS_SCRIPTS", "Call", "EvalResult", "Name", "Param",
    "ParseError", "Script", "corpus_path", "evaluate", "load_corpus", "load_script",
    "parse", "parse_args", "parse_point", "pretty_print", "value_to_dict",
]
