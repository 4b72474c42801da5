from __future__ import annotations

import pytest

from phonotax.phonology import load_inventory
from phonotax.train import train_model

INVENTORY_TEXT = (
    "\n".join(
        f"{s}\tC"
        for s in ["p", "b", "t", "d", "k", "g", "s", "z", "ʃ", "m", "n", "l", "r", "w", "j"]
    )
    + "\n"
    + "\n".join(f"{s}\tV" for s in ["æ", "ɪ", "ʌ", "ə", "iː", "aɪ", "ɔɪ", "e"])
    + "\n"
)


@pytest.fixture(scope="session")
def inv():
    """Small fixed inventory used by most tests."""
    return load_inventory(INVENTORY_TEXT)


@pytest.fixture(scope="session")
def default_inv():
    """The packaged full inventory."""
    from importlib import resources

    text = resources.files("phonotax").joinpath("data/inventory_ipa.tsv").read_text("utf-8")
    return load_inventory(text)


TOY_LEXICON = """\
cat\tk æ1 t
at\tæ1 t
still\ts t ɪ1 l
dull\td ʌ1 l
sandal\ts æ1 n d ə0 l
candle\tk æ1 n d ə0 l
busboy\tb ʌ1 s + b ɔɪ1
"""


@pytest.fixture(scope="session")
def toy_model(inv):
    return train_model(TOY_LEXICON, inv).model
