from wvo.golden import GRID_VALUES, classify, in_N, in_P, in_Q, run_example_suite


def test_named_tuples():
    assert classify(1, 0, 0, -1, 0) and in_N(0, 0, -1, 0)
    assert not classify(1, 1, 1, 0, 0)
    assert not classify(2, 1, 0, 0, -1) and not in_P(1, 0, 0, -1)
    assert in_Q(-1, 0, 1, 0, 0, -1)


def test_suite_reports_are_clean():
    for which in (1, 2):
        rep = run_example_suite(which)
        assert rep.total == len(GRID_VALUES) ** 4 >= 200
        assert rep.ok, rep.to_dict()


def test_suite_detects_a_wrong_classifier(monkeypatch):
    import wvo.golden as golden

    monkeypatch.setattr(golden, "in_N", lambda a, b, y1, y2: True)
    rep = golden.run_example_suite(1, values=GRID_VALUES[:3])
    assert rep.disagreements and not rep.ok
