"""The input gate mirrors the frontend's output closure exactly."""

from turkaz_backend.validation import INPUT_ALPHABET, KAZAKH_LETTERS, validate_text

from conftest import load_vectors


def test_alphabet_size():
    assert len(KAZAKH_LETTERS) == 42
    assert len(INPUT_ALPHABET) == 42 + 5 + 1


def test_conformance_vectors():
    for vector in load_vectors():
        problem = validate_text(vector["text"])
        if vector["accept"]:
            assert problem is None, f"{vector['note']}: {problem}"
        else:
            assert problem is not None, vector["note"]


def test_refusal_names_the_characters():
    problem = validate_text("сәлем q;")
    assert problem is not None
    assert "U+0071" in problem and "U+003B" in problem


def test_empty_text_refused():
    assert validate_text("") == "empty text"
