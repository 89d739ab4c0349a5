from webcred.language import detect_language

ENGLISH = (
    "The new vaccination schedule was announced by the health department "
    "this morning, and most of the local clinics said that they would be "
    "ready to offer appointments before the end of the month."
)

FRENCH = (
    "Le ministère de la santé a annoncé ce matin le nouveau calendrier de "
    "vaccination, et la plupart des cliniques locales ont déclaré qu'elles "
    "seraient prêtes à proposer des rendez-vous avant la fin du mois."
)

SPANISH = (
    "El ministerio de salud anunció esta mañana el nuevo calendario de "
    "vacunación, y la mayoría de las clínicas locales dijeron que estarían "
    "listas para ofrecer citas antes de fin de mes."
)


def test_detects_english():
    lang, confidence = detect_language(ENGLISH)
    assert lang == "en"
    assert confidence > 0.5


def test_detects_french_as_not_english():
    lang, _ = detect_language(FRENCH)
    assert lang == "fr"


def test_detects_spanish_as_not_english():
    lang, _ = detect_language(SPANISH)
    assert lang == "es"


def test_short_text_is_undetermined():
    assert detect_language("hi") == ("und", 0.0)
    assert detect_language("") == ("und", 0.0)


def test_text_without_letters_is_undetermined():
    lang, confidence = detect_language("12345 67890 !!! ??? 000 111 222 333")
    assert lang == "und"
    assert confidence == 0.0


def test_confidence_is_higher_for_longer_english():
    _, short_conf = detect_language(ENGLISH[:40])
    _, long_conf = detect_language(ENGLISH * 3)
    assert long_conf >= short_conf


def test_mixed_but_mostly_english_detected_as_english():
    text = ENGLISH * 4 + " rendez-vous"
    lang, _ = detect_language(text)
    assert lang == "en"
