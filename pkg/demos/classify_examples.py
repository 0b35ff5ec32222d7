"""
Fingerprint classification
==========================

Run the classifier over a few inputs and print verdicts with notes.
"""

from __future__ import annotations

from terracini import SampleConfig, build_spec, classify

cfg = SampleConfig()
for text in (
    "veronese:n=3,d=2",
    "veronese:n=3,d=2|project:inner",
    "veronese:n=3,d=2|project:general",
    "segre:2x2",
    "pluecker:r=5",
    "segre:1x3",
):
    rep = classify(build_spec(text, cfg), cfg)
    print(f"{text:<36} {rep.verdict.value}")
    for note in rep.notes:
        print("    note:", note)
