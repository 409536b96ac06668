from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
MODELS = ROOT / "models"
GOLDEN = Path(__file__).resolve().parent / "golden"


def corpus_files():
    return sorted(MODELS.glob("*.dim"))


def malformed_files():
    return sorted(MODELS.glob("malformed/*.dim"))
