"""Command line entry points.

Subcommands mirror the pipeline stages: synth makes a benchmark corpus,
detect finds reuse edges, consolidate merges fragments and builds passage
clusters, eval scores edges against ground truth, search queries the
catalogue, and serve exposes everything over HTTP.
"""

from __future__ import annotations

import functools
import logging
import sys

import click

from . import consolidate as consolidate_mod
from . import edgestore, metasearch, synthbench
from .corpus import ingest_corpus
from .detect import AlignParams, detect_corpus
from .edges import read_edges, write_edges
from .errors import ReuseKitError

logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")


def _friendly(fn):
    """Turn package errors into one-line CLI failures instead of tracebacks."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ReuseKitError as exc:
            raise click.ClickException(str(exc)) from None

    return wrapper


@click.group()
def main():
    """Text reuse detection and exploration toolkit."""


@main.command()
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--k", default=10, show_default=True, help="seed k-mer length")
@click.option("--min-len", default=120, show_default=True, help="minimum alignment columns")
@click.option("--min-positives", default=70.0, show_default=True, help="minimum match percentage")
@click.option("--threads", default=1, show_default=True)
@_friendly
def detect(corpus_dir, out_path, k, min_len, min_positives, threads):
    """Find reuse edges between all document pairs of a corpus."""
    corpus = ingest_corpus(corpus_dir)
    params = AlignParams(k=k, min_len=min_len, min_positives=min_positives)
    edges = detect_corpus(corpus, params=params, threads=threads)
    count = write_edges(edges, out_path)
    click.echo(f"wrote {count} edges to {out_path}", err=True)


@main.command()
@click.option("--edges", "edges_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True, file_okay=False),
              help="corpus directory, needed for publication years")
@click.option("--out-passages", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--out-clusters", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--out-edges", default=None, type=click.Path(dir_okay=False, writable=True),
              help="also write the defragmented edges")
@click.option("--gap", default=consolidate_mod.DEFAULT_GAP_LIMIT, show_default=True)
@click.option("--overlap", default=consolidate_mod.DEFAULT_OVERLAP_FRAC, show_default=True)
@_friendly
def consolidate(edges_path, corpus_dir, out_passages, out_clusters, out_edges, gap, overlap):
    """Defragment edges, then emit passages and first-source clusters."""
    corpus = ingest_corpus(corpus_dir)
    edges = read_edges(edges_path)
    merged = consolidate_mod.defragment(edges, gap_limit=gap)
    if out_edges:
        write_edges(merged, out_edges)
    passages, relation = consolidate_mod.build_passages(merged, overlap_frac=overlap)
    years = {doc.doc_id: doc.meta.year for doc in corpus}
    clusters = consolidate_mod.first_source(passages, relation, years)
    consolidate_mod.write_passages(passages, out_passages)
    consolidate_mod.write_clusters(clusters, out_clusters)
    click.echo(
        f"{len(edges)} edges -> {len(merged)} after defragment; "
        f"{len(passages)} passages, {len(clusters)} clusters",
        err=True,
    )


@main.command()
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--q", "query", required=True)
@_friendly
def search(corpus_dir, query):
    """Search the catalogue by author and title; prints TSV."""
    corpus = ingest_corpus(corpus_dir)
    click.echo("doc_id\tyear\tauthor\ttitle\tscore")
    for r in metasearch.search(corpus, query):
        click.echo(f"{r.doc_id}\t{r.year}\t{r.author}\t{r.title}\t{r.score}")


@main.command()
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--edges", "edges_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--clusters", "clusters_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="clusters TSV from the consolidate step")
@click.option("--static", "static_dir", default=None, type=click.Path(file_okay=False),
              help="directory of built frontend assets to serve at /")
@click.option("--external-url-template", default=None,
              help="URL pattern with {doc_id} and {page} placeholders")
@_friendly
def serve(corpus_dir, edges_path, port, host, clusters_path, static_dir, external_url_template):
    """Serve the HTTP API (and optionally the web viewer)."""
    import uvicorn

    from .api import ApiConfig, create_app

    corpus = ingest_corpus(corpus_dir)
    store = edgestore.load(edges_path, corpus)
    if clusters_path:
        with open(clusters_path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
        if header != "cluster_id\tsource_passage_id\tsink_passage_id":
            raise click.ClickException(f"{clusters_path}: not a clusters file")
    config = ApiConfig(static_dir=static_dir, external_url_template=external_url_template)
    app = create_app(corpus, store, config)
    click.echo(f"serving {len(corpus)} docs, {len(store)} edges on {host}:{port}", err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@_friendly
def synth(spec_path, out_dir):
    """Generate a synthetic benchmark corpus with ground truth."""
    gen_spec = synthbench.GenSpec.from_toml(spec_path)
    truth = synthbench.generate(gen_spec, out_dir)
    pairs = sum(len(p.placements) * (len(p.placements) - 1) // 2 for p in truth.plants)
    click.echo(
        f"generated {len(truth.doc_ids)} docs, {len(truth.plants)} plants, "
        f"{pairs} reuse pairs in {out_dir}",
        err=True,
    )


@main.command("eval")
@click.option("--edges", "edges_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--truth", "truth_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--iou", default=0.5, show_default=True)
@_friendly
def eval_cmd(edges_path, truth_path, iou):
    """Score detected edges against benchmark ground truth; prints TSV."""
    edges = read_edges(edges_path)
    truth = synthbench.load_ground_truth(truth_path)
    report = synthbench.evaluate(edges, truth, iou_threshold=iou)
    click.echo("metric\tvalue")
    click.echo(f"recall\t{report.recall:.4f}")
    click.echo(f"precision\t{report.precision:.4f}")
    click.echo(f"recalled_pairs\t{report.recalled_pairs}")
    click.echo(f"total_pairs\t{report.total_pairs}")
    click.echo(f"true_positive_edges\t{report.true_positive_edges}")
    click.echo(f"total_edges\t{report.total_edges}")
    click.echo(report.summary(), err=True)


if __name__ == "__main__":
    sys.exit(main())
