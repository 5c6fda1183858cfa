"""Dataset ingestion, feature index construction, and index persistence.

Two dataset layouts are understood:

* subdirectory-per-class: every immediate subdirectory of the root is a class
  label and the image files directly inside it are its members;
* flat numeric: image files sit directly in the root with numeric stems, and
  the label is stem // 100 (the usual 100-images-per-category convention).

The on-disk index format is a plain UTF-8 text file:

    dscop-index 1 <scheme> <metric> <record count>
    <id>\t<label>\t<hex float> <hex float> ...
    ...
    sha256 <hex digest of every byte above>

Feature values are written as C99 hexadecimal float literals, so a round trip
through save/load is bit-exact. The trailing digest covers the header and all
record lines; loads fail on a bad header, version, record count, vector
length, or digest.
"""

import hashlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .descriptor import DEFAULT_SCHEME, QuantizationScheme, extract_feature_from_file
from .errors import BuildError, CbirError, DatasetError, IndexFormatError
from .metrics import DEFAULT_METRIC, normalize_metric

FORMAT_NAME = "dscop-index"
FORMAT_VERSION = 1

IMAGE_SUFFIXES = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff"}


@dataclass(frozen=True)
class LabeledImage:
    """One dataset member: unique id (relative path), class label, file path."""

    id: str
    label: str
    path: Path


@dataclass
class FeatureIndex:
    """Feature vectors for a dataset under a single quantization scheme."""

    scheme: QuantizationScheme
    metric_default: str
    ids: list
    labels: list
    features: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.ids)

    @property
    def class_sizes(self):
        """Label -> member count, in sorted label order."""
        return dict(sorted(Counter(self.labels).items()))

    def records(self):
        """Iterate (id, label, feature vector) triples."""
        for i in range(len(self.ids)):
            yield self.ids[i], self.labels[i], self.features[i]


def _is_image_file(p):
    return p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES and not p.name.startswith(".")


def ingest_dataset(root):
    """List the labeled images of a dataset directory, sorted by id.

    Raises DatasetError for a missing root, an empty dataset, or a
    non-numeric stem in flat mode.
    """
    root = Path(root)
    if not root.is_dir():
        raise DatasetError(f"dataset root is not a directory: {root}")

    try:
        entries = sorted(root.iterdir())
        subdirs = [d for d in entries if d.is_dir() and not d.name.startswith(".")]
        images = []
        if subdirs:
            for sub in subdirs:
                for f in sorted(p for p in sub.iterdir() if _is_image_file(p)):
                    images.append(
                        LabeledImage(id=f"{sub.name}/{f.name}", label=sub.name, path=f)
                    )
        else:
            for f in (p for p in entries if _is_image_file(p)):
                if not f.stem.isdigit():
                    raise DatasetError(
                        f"flat dataset requires numeric file stems: {f.name!r} in {root}"
                    )
                images.append(
                    LabeledImage(id=f.name, label=str(int(f.stem) // 100), path=f)
                )
    except OSError as exc:
        raise DatasetError(f"cannot list dataset directory: {exc}") from exc
    if not images:
        raise DatasetError(f"no images found under {root}")
    images.sort(key=lambda im: im.id)
    return images


def _extract_record(args):
    image_id, path, k_bins, l_bins = args
    try:
        vec = extract_feature_from_file(path, QuantizationScheme(k_bins, l_bins))
        return image_id, vec, None
    except (CbirError, ValueError, OSError) as exc:
        return image_id, None, str(exc)


def build_index(images, scheme=DEFAULT_SCHEME, metric_default=DEFAULT_METRIC, workers=1):
    """Extract a feature vector per image and assemble the index.

    Any per-image failure aborts the whole build with a BuildError naming the
    failed ids, so evaluation denominators never go silently wrong. workers > 1
    spreads extraction over a process pool; output is identical either way.
    """
    images = list(images)
    if not images:
        raise BuildError("cannot build an index from zero images")
    metric_default = normalize_metric(metric_default)

    tasks = [(im.id, im.path, scheme.k_bins, scheme.l_bins) for im in images]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_extract_record, tasks, chunksize=8))
    else:
        results = [_extract_record(t) for t in tasks]

    failures = [(image_id, err) for image_id, _, err in results if err is not None]
    if failures:
        detail = "; ".join(f"{image_id}: {err}" for image_id, err in failures)
        raise BuildError(f"feature extraction failed for {len(failures)} image(s): {detail}")

    features = np.stack([vec for _, vec, _ in results])
    return FeatureIndex(
        scheme=scheme,
        metric_default=metric_default,
        ids=[im.id for im in images],
        labels=[im.label for im in images],
        features=features,
    )


def save_index(index, path):
    """Write an index to disk in the documented text format (bit-exact)."""
    for image_id, label in zip(index.ids, index.labels):
        for value, what in ((image_id, "id"), (label, "label")):
            if any(ch in value for ch in "\t\n\r"):
                raise ValueError(f"index {what} contains tab/newline: {value!r}")

    lines = [
        f"{FORMAT_NAME} {FORMAT_VERSION} {index.scheme.label} "
        f"{index.metric_default} {len(index)}\n"
    ]
    for image_id, label, vec in index.records():
        values = " ".join(float(x).hex() for x in vec)
        lines.append(f"{image_id}\t{label}\t{values}\n")
    body = "".join(lines).encode("utf-8")
    digest = hashlib.sha256(body).hexdigest()
    with open(path, "wb") as fh:
        fh.write(body)
        fh.write(f"sha256 {digest}\n".encode("utf-8"))


def load_index(path):
    """Read an index written by save_index; round trip is bit-exact.

    Raises IndexFormatError for a bad header, unsupported version, record
    count mismatch, malformed record, truncation, or checksum failure.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise IndexFormatError(f"cannot read index file {path}: {exc}") from exc

    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IndexFormatError(f"index file {path} is not valid UTF-8") from exc
    lines = text.splitlines(keepends=True)
    if len(lines) < 2:
        raise IndexFormatError(f"index file {path} is truncated")

    trailer = lines[-1]
    parts = trailer.split()
    if len(parts) != 2 or parts[0] != "sha256" or not trailer.endswith("\n"):
        raise IndexFormatError(f"index file {path} is truncated (missing checksum line)")
    body = "".join(lines[:-1]).encode("utf-8")
    if hashlib.sha256(body).hexdigest() != parts[1]:
        raise IndexFormatError(f"index file {path} failed its checksum")

    header = lines[0].split()
    if len(header) != 5 or header[0] != FORMAT_NAME:
        raise IndexFormatError(f"index file {path} has an unrecognized header")
    if header[1] != str(FORMAT_VERSION):
        raise IndexFormatError(
            f"index file {path} has unsupported version {header[1]} "
            f"(expected {FORMAT_VERSION})"
        )
    try:
        scheme = QuantizationScheme.parse(header[2])
        metric = normalize_metric(header[3])
        count = int(header[4])
    except ValueError as exc:
        raise IndexFormatError(f"index file {path} has a bad header: {exc}") from exc

    records = lines[1:-1]
    if len(records) != count:
        raise IndexFormatError(
            f"index file {path} is truncated: header promises {count} records, "
            f"found {len(records)}"
        )

    ids, labels = [], []
    features = np.empty((count, scheme.feature_length), dtype=np.float64)
    for i, line in enumerate(records):
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 3:
            raise IndexFormatError(f"index file {path}: malformed record on line {i + 2}")
        image_id, label, values = cols
        try:
            vec = [float.fromhex(tok) for tok in values.split()]
        except ValueError as exc:
            raise IndexFormatError(
                f"index file {path}: bad float literal on line {i + 2}: {exc}"
            ) from exc
        if len(vec) != scheme.feature_length:
            raise IndexFormatError(
                f"index file {path}: record {image_id!r} has {len(vec)} values, "
                f"expected {scheme.feature_length}"
            )
        ids.append(image_id)
        labels.append(label)
        features[i] = vec
    return FeatureIndex(
        scheme=scheme, metric_default=metric, ids=ids, labels=labels, features=features
    )
