"""The three code-generation prompt templates.

Templates live as package data and are treated as frozen byte-for-byte
artifacts; ``#ROUTINE#`` is the only substitution point. The third mode
additionally appends a user-supplied Fortran reference source (whose leading
comment block carries the routine specification) verbatim at the end.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources

from .errors import KernelGaugeError
from .routines import ROUTINES


class PromptMode(enum.Enum):
    NAME_TO_CCODE = "NameToCcode"
    NAME_TO_OPT_CCODE = "NameToOptCcode"
    FRTCODE_TO_OPT_CCODE = "FrtcodeToOptCcode"

    @classmethod
    def parse(cls, value) -> "PromptMode":
        if isinstance(value, cls):
            return value
        for mode in cls:
            if mode.value.lower() == str(value).lower():
                return mode
        raise KernelGaugeError(f"unknown prompt mode {value!r}")


_TEMPLATE_FILES = {
    PromptMode.NAME_TO_CCODE: "name_to_ccode.txt",
    PromptMode.NAME_TO_OPT_CCODE: "name_to_opt_ccode.txt",
    PromptMode.FRTCODE_TO_OPT_CCODE: "frtcode_to_opt_ccode.txt",
}


@dataclass(frozen=True)
class PromptBundle:
    mode: PromptMode
    routine: str
    text: str
    attachment: str | None = None


def template_text(mode: PromptMode) -> str:
    """Raw template with the #ROUTINE# placeholder intact."""
    name = _TEMPLATE_FILES[PromptMode.parse(mode)]
    return (resources.files("kernelgauge") / "templates" / name).read_text("utf-8")


def build_prompt(routine: str, mode: PromptMode | str,
                 attachment: str | None = None) -> PromptBundle:
    """Render the prompt for a routine; mode 3 requires the Fortran source."""
    mode = PromptMode.parse(mode)
    if routine not in ROUTINES:
        raise KernelGaugeError(f"unknown routine {routine!r}")
    if mode is PromptMode.FRTCODE_TO_OPT_CCODE:
        if not attachment:
            raise KernelGaugeError(
                "FrtcodeToOptCcode needs the Fortran reference source attached")
    elif attachment:
        raise KernelGaugeError(f"mode {mode.value} takes no attachment")
    text = template_text(mode).replace("#ROUTINE#", routine)
    if attachment is not None:
        text = text + "\n" + attachment
    return PromptBundle(mode=mode, routine=routine, text=text,
                        attachment=attachment)
