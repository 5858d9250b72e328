"""
Base Codec Class
All codecs exposed on the command line inherit from this class
"""
from abc import ABC, abstractmethod
from typing import Any

from ssa_codes.logger import ssa_logger
from ssa_codes.utils.dna import DnaSeq


class BaseCodec(ABC):
    """
    Base class for the three SSA codecs

    Each codec must implement:
    - name: scheme name used by ``--scheme``
    - encode() / decode(): the codec itself
    - parse_message() / format_message(): the text form of a message, so
      that ``encode`` followed by ``decode`` reproduces the input lines
    """

    def __init__(self):
        self.logger = ssa_logger

    @property
    @abstractmethod
    def name(self) -> str:
        """Scheme name"""
        pass

    @abstractmethod
    def encode(self, message: Any) -> DnaSeq:
        """Map a message to a codeword"""
        pass

    @abstractmethod
    def decode(self, codeword: DnaSeq) -> Any:
        """
        Map a codeword back to its message

        Raises:
            NotACodewordError: if the word was not produced by ``encode``
        """
        pass

    @abstractmethod
    def parse_message(self, line: str) -> Any:
        """Read one message from its text form"""
        pass

    @abstractmethod
    def format_message(self, message: Any) -> str:
        """Render one message in its text form"""
        pass

    def log_debug(self, message: str):
        self.logger.debug(f"[{self.name}] {message}")
