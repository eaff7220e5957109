"""Reads the ratings export with Python's csv module.

usage: csv_check.py <rubric cli>
"""

import csv
import io
import subprocess
import sys
import tempfile


def main() -> int:
    cli = sys.argv[1]
    title = 'Security, management and "practice"'
    with tempfile.TemporaryDirectory() as store:
        def run(*args: str) -> str:
            return subprocess.run([cli, "--store", store, *args], check=True,
                                  capture_output=True, text=True).stdout

        run("init")
        run("profile", "create", "fx", "--set", "1=4", "--set", "2=2", "--set", "1.1=5",
            "--set", "2.1=4", "--set", "2.2=5")
        run("article", "add", "a1", "--title", title)
        run("assess", "create", "--article", "a1", "--profile", "fx")
        for criterion, score in (("1.1", "4"), ("2.1", "5"), ("2.2", "2")):
            run("assess", "score", "a1--fx-r1", criterion, score)
        document = run("export", "--profile", "fx")

    rows = list(csv.DictReader(io.StringIO(document, newline="")))
    assert len(rows) == 1, rows
    row = rows[0]
    assert row["title"] == title, row["title"]
    assert row["cat_1_score"] == "80.00%", row
    assert row["cat_2_score"] == "66.67%", row
    assert row["cat_3_score"] == "", row
    assert row["article_rating"] == "75.56%", row
    assert row["rank"] == "1", row
    print("ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
