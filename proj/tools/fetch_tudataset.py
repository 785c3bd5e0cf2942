#!/usr/bin/env python3
"""Download a TUDataset benchmark bundle and unpack its text files.

Usage: fetch_tudataset.py NAME [DEST_DIR]

Fetches <NAME>.zip from the TU benchmark mirror and leaves the files under
DEST_DIR/<NAME>/ (default DEST_DIR: data/), e.g.

    tools/fetch_tudataset.py MUTAG data/
    build/osq measure --input data/MUTAG --format tudataset
"""

import io
import pathlib
import sys
import zipfile

import requests

MIRRORS = [
    "https://www.chrsmrrs.com/graphkerneldatasets/{name}.zip",
    "https://ls11-www.cs.tu-dortmund.de/people/morris/graphkerneldatasets/{name}.zip",
]


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__, file=sys.stderr)
        return 2
    name = sys.argv[1]
    dest = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else "data")
    last_error = None
    for mirror in MIRRORS:
        url = mirror.format(name=name)
        try:
            print(f"fetching {url}")
            response = requests.get(url, timeout=120)
            response.raise_for_status()
        except requests.RequestException as exc:
            last_error = exc
            continue
        dest.mkdir(parents=True, exist_ok=True)
        with zipfile.ZipFile(io.BytesIO(response.content)) as archive:
            archive.extractall(dest)
        bundle = dest / name
        print(f"unpacked to {bundle}")
        if not (bundle / f"{name}_A.txt").exists():
            print("warning: expected edge file missing after unpack", file=sys.stderr)
            return 1
        return 0
    print(f"error: could not fetch {name}: {last_error}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
