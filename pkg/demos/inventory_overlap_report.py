#!/usr/bin/env python3
"""Quantify how much of each alphabet the Kazakh letter set can voice directly.

Run:  python3 demos/inventory_overlap_report.py
"""

from turkaz.analysis import overlap_matrix, summary

if __name__ == "__main__":
    print("Shared phonetic symbols (10x10):\n")
    print(overlap_matrix().to_tsv())
    print("Per-language digest:\n")
    print(summary())
