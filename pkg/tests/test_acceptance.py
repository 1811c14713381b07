"""End-to-end acceptance gate.

Each test exercises one numbered criterion and prints a single
"CRITERION n PASS/FAIL" line with its measurements, so the suite output
doubles as the acceptance report.
"""

import json
import random
import time

import pytest

from seqtok import (
    ScanStrategy,
    SPECIAL_KINDS,
    TokenKind,
    filter_text,
    find_all,
    fingerprint,
    recognize_date,
    recognize_email,
    recognize_ip,
    recognize_url,
    roll,
    scan_special,
    tokenize,
)
from seqtok.cli import run

from _corpus import big_ascii_corpus, corpus
from _oracles import find_all_oracle, frequency_oracle, recognize_oracle

RECOGNIZERS = {
    TokenKind.IP: recognize_ip,
    TokenKind.EMAIL: recognize_email,
    TokenKind.URL: recognize_url,
    TokenKind.DATE: recognize_date,
}


def report(number, ok, detail):
    line = f"CRITERION {number} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def acceptance_corpus():
    return corpus(10_000, seed=20240716)


def test_criterion_1_paper_literals():
    literals = [
        (TokenKind.IP, "192.168.0.1"),
        (TokenKind.EMAIL, "qalhajja@kfu.edu.sa"),
        (TokenKind.URL, "http://www.kfu.edu.sa"),
        (TokenKind.DATE, "16/07/1982"),
    ]
    started = time.perf_counter()
    good = 0
    for kind, literal in literals:
        tokens = tokenize(f"see {literal} here")
        specials = [t for t in tokens if t.kind is not TokenKind.WORD]
        if len(specials) == 1 and specials[0].kind is kind \
                and specials[0].text == literal:
            good += 1
    elapsed = time.perf_counter() - started
    report(1, good == 4 and elapsed < 1.0,
           f"{good}/4 literals recognized in {elapsed:.3f}s (limit 1s)")


def test_criterion_2_recognizer_oracle_equivalence():
    alphabet = (
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
        "0123456789.@/-: "
    )
    rng = random.Random(20240716)
    started = time.perf_counter()
    disagreements = 0
    for _ in range(100_000):
        s = "".join(
            rng.choice(alphabet) for _ in range(rng.randint(0, 64))
        )
        for kind, fn in RECOGNIZERS.items():
            got = fn(s, 0)
            want = recognize_oracle(kind, s, 0)
            pair = None if got is None else (got.start, got.end)
            if pair != want:
                disagreements += 1
    elapsed = time.perf_counter() - started
    report(2, disagreements == 0 and elapsed < 30.0,
           f"{disagreements} disagreements over 100000 strings "
           f"in {elapsed:.1f}s (limit 30s)")


def test_criterion_3_ipv4_grid():
    components = ["0", "1", "9", "10", "99", "100", "199", "249", "255",
                  "256", "300", "007"]
    started = time.perf_counter()
    mismatches = 0
    cases = 0
    for a in components:
        for b in components:
            for c in components:
                for d in components:
                    quad = f"{a}.{b}.{c}.{d}"
                    accepted = recognize_ip(quad, 0) is not None \
                        and recognize_ip(quad, 0).end == len(quad)
                    expected = all(
                        int(p) <= 255 for p in (a, b, c, d)
                    )
                    mismatches += accepted != expected
                    cases += 1
    elapsed = time.perf_counter() - started
    report(3, cases == 12 ** 4 and mismatches == 0 and elapsed < 5.0,
           f"{mismatches} mismatches over {cases} quads "
           f"in {elapsed:.2f}s (limit 5s)")


def test_criterion_4_rabin_karp():
    rng = random.Random(40)
    started = time.perf_counter()
    search_mismatches = 0
    for _ in range(1000):
        n = rng.randint(0, 4096)
        text = bytes(rng.choice(b"abcd") for _ in range(n))
        m = rng.randint(1, 16)
        if n >= m and rng.random() < 0.5:
            at = rng.randint(0, n - m)
            pattern = text[at:at + m]
        else:
            pattern = bytes(rng.choice(b"abcd") for _ in range(m))
        if find_all(pattern, text) != find_all_oracle(pattern, text):
            search_mismatches += 1
    roll_mismatches = 0
    for _ in range(10_000):
        n = rng.randint(2, 256)
        text = bytes(rng.randrange(256) for _ in range(n))
        m = rng.randint(1, min(16, n - 1))
        h = fingerprint(text[:m])
        for i in range(1, n - m + 1):
            h = roll(h, text[i - 1], text[i + m - 1], m)
            if h != fingerprint(text[i:i + m]):
                roll_mismatches += 1
    elapsed = time.perf_counter() - started
    report(4, search_mismatches == 0 and roll_mismatches == 0 and elapsed < 10.0,
           f"{search_mismatches} search and {roll_mismatches} rolling "
           f"mismatches in {elapsed:.1f}s (limit 10s)")


def test_criterion_5_strategy_equivalence(acceptance_corpus):
    started = time.perf_counter()
    divergences = 0
    for doc in acceptance_corpus:
        direct = scan_special(doc, SPECIAL_KINDS, ScanStrategy.DIRECT)
        anchored = scan_special(doc, SPECIAL_KINDS, ScanStrategy.ANCHORED)
        divergences += direct != anchored
    elapsed = time.perf_counter() - started
    report(5, divergences == 0 and elapsed < 30.0,
           f"{divergences} divergences over {len(acceptance_corpus)} documents "
           f"in {elapsed:.1f}s (limit 30s)")


def test_criterion_6_filtering_properties(acceptance_corpus):
    from seqtok import Action, Config, SequenceRule

    cfg = Config(rules={
        k: SequenceRule(k, action=Action.REMOVE) for k in SPECIAL_KINDS
    })
    residuals = 0
    non_idempotent = 0
    for doc in acceptance_corpus:
        filtered = filter_text(doc, cfg)
        if scan_special(filtered, SPECIAL_KINDS, ScanStrategy.DIRECT):
            residuals += 1
        if filter_text(filtered, cfg) != filtered:
            non_idempotent += 1
    report(6, residuals == 0 and non_idempotent == 0,
           f"{residuals} residual matches, {non_idempotent} idempotence "
           f"breaks over {len(acceptance_corpus)} documents")


def test_criterion_7_statistics_identity(acceptance_corpus):
    from seqtok import compute_stats

    bad_totals = 0
    bad_freqs = 0
    for doc in acceptance_corpus:
        tokens = tokenize(doc)
        rep = compute_stats(tokens, doc)
        if rep.total_tokens != rep.word_tokens + sum(rep.per_kind.values()):
            bad_totals += 1
        freq = frequency_oracle(t.text for t in tokens)
        want_top = tuple(
            sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[:10]
        )
        if (rep.top_terms != want_top or rep.unique_tokens != len(freq)
                or rep.total_tokens != sum(freq.values())):
            bad_freqs += 1
    report(7, bad_totals == 0 and bad_freqs == 0,
           f"{bad_totals} total-identity and {bad_freqs} frequency "
           f"mismatches over {len(acceptance_corpus)} documents")


def test_criterion_8_cli_end_to_end(tmp_path, capsys):
    doc = tmp_path / "sample.txt"
    doc.write_text(
        "Contact qalhajja@kfu.edu.sa before 16/07/1982.\n"
        "Mirrors: http://www.kfu.edu.sa and 192.168.0.1, see WWW.none\n",
        encoding="utf-8",
    )
    cfg = tmp_path / "cfg.xml"
    cfg.write_text(
        "<tokenizer-config>"
        '<sequences><sequence type="date" action="remove"/></sequences>'
        '<options tag-output="true"/>'
        "</tokenizer-config>",
        encoding="utf-8",
    )
    outputs = []
    ok = True
    for strategy in ("direct", "anchored"):
        for attempt in range(2):
            out = tmp_path / f"{strategy}-{attempt}.tok"
            code = run([
                "-i", str(doc), "-o", str(out), "--config", str(cfg),
                "--strategy", strategy, "--stats-format", "json",
            ])
            ok = ok and code == 0
            stats = capsys.readouterr().out
            json.loads(stats)
            outputs.append((out.read_bytes(), stats))
    identical = all(o == outputs[0] for o in outputs)
    code_missing = run(["-i", str(tmp_path / "absent.txt")])
    code_usage = run([])
    capsys.readouterr()
    exit_ok = code_missing == 1 and code_usage == 2
    report(8, ok and identical and exit_ok,
           f"byte-identical={identical} across strategies/runs, "
           f"exit codes (0, {code_missing}, {code_usage})")


def test_criterion_9_performance_trend():
    text = big_ascii_corpus(10 * 1024 * 1024)
    assert len(text) >= 10 * 1024 * 1024
    tokenize(text[:1 << 16])  # warm caches before timing

    started = time.perf_counter()
    direct_tokens = tokenize(text, strategy=ScanStrategy.DIRECT)
    direct_s = time.perf_counter() - started

    started = time.perf_counter()
    anchored_tokens = tokenize(text, strategy=ScanStrategy.ANCHORED)
    anchored_s = time.perf_counter() - started

    same = direct_tokens == anchored_tokens
    report(9, same and direct_s < 5.0 and anchored_s <= 2.0 * direct_s,
           f"10 MiB: direct {direct_s:.2f}s (limit 5s), anchored "
           f"{anchored_s:.2f}s (limit 2x direct), streams equal: {same}")
