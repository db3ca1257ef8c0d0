use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use thickness::format::{
    parse_book, parse_drawing, parse_graph, to_json, AuditFile, BookFile, DrawingFile, FormatError,
    GkGraphFile,
};
use thickness::{
    book_thickness_exact, build_gk, embed_on_circle, render_svg, separation_audit,
    sqrt_book_layout, theorem1_layout, validate_book_embedding, validate_layered_drawing,
    BookThickness, RenderStyle, ValidationReport, Verdict, DEFAULT_BUDGET,
};

/// Largest SVG side produced by `render --book`, whose parabola coordinates grow quadratically.
const MAX_BOOK_PIXELS: u32 = 1600;

/// Conflicts echoed to stdout; the full list goes to `--report`.
const SHOWN_CONFLICTS: usize = 10;

#[derive(Parser)]
#[command(
    name = "thickness",
    version,
    about = "Build and check layered drawings and book embeddings of G_k"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write G_k (K_k with every edge subdivided) as a graph file.
    GenGk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the two-layer grid drawing of G_k.
    LayoutTheorem1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the block-based book embedding of G_k.
    LayoutSqrt {
        #[arg(long)]
        k: usize,
        /// Vertices per block; defaults to ceil(sqrt k).
        #[arg(long)]
        block_size: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a layered drawing. Exits 1 if it has conflicts.
    ValidateDrawing {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a book embedding. Exits 1 if it has conflicts.
    ValidateBook {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        book: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the book thickness of a small graph. Exits 1 if undecided.
    Bt {
        #[arg(long)]
        graph: PathBuf,
        /// Give up above this many pages; defaults to ceil(n/2), which always suffices.
        #[arg(long)]
        max_pages: Option<usize>,
        /// Search nodes per page count.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Look for a monochromatic K_5 in the page-pair coloring of a book
    /// embedding of G_k. Exits 1 on a contradiction witness.
    Audit {
        #[arg(long)]
        k: usize,
        /// Embedding to audit; defaults to the block-based layout.
        #[arg(long)]
        book: Option<PathBuf>,
        /// Where to write the JSON report; stdout if omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw a layered drawing, or a book embedding on a parabola, as SVG.
    #[command(group(ArgGroup::new("source").required(true).args(["drawing", "book"])))]
    Render {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        drawing: Option<PathBuf>,
        #[arg(long)]
        book: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        highlight_conflicts: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, FormatError>) -> Result<T> {
    parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write(path, &to_json(value))
}

fn verdict_code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn summarize(report: &ValidationReport, group: &str) -> ExitCode {
    if report.valid {
        println!("valid: {} {group}s, 0 conflicts", report.layers_used);
    } else {
        println!(
            "invalid: {} conflicts over {} {group}s",
            report.conflicts.len(),
            report.layers_used
        );
        for c in report.conflicts.iter().take(SHOWN_CONFLICTS) {
            println!("  {c}");
        }
        if report.conflicts.len() > SHOWN_CONFLICTS {
            println!("  ...");
        }
    }
    verdict_code(report.valid)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::GenGk { k, out } => {
            write_json(&out, &GkGraphFile::from(&build_gk(k)?))?;
        }
        Command::LayoutTheorem1 { k, out } => {
            write_json(&out, &DrawingFile::from(&theorem1_layout(k)?))?;
        }
        Command::LayoutSqrt { k, block_size, out } => {
            write_json(&out, &BookFile::from(&sqrt_book_layout(k, block_size)?))?;
        }
        Command::ValidateDrawing {
            graph,
            drawing,
            report,
        } => {
            let g = load(&graph, parse_graph)?;
            let d = load(&drawing, parse_drawing)?;
            let r = validate_layered_drawing(&g, &d)?;
            if let Some(path) = report {
                write_json(&path, &r)?;
            }
            return Ok(summarize(&r, "layer"));
        }
        Command::ValidateBook {
            graph,
            book,
            report,
        } => {
            let g = load(&graph, parse_graph)?;
            let be = load(&book, parse_book)?;
            let r = validate_book_embedding(&g, &be)?;
            if let Some(path) = report {
                write_json(&path, &r)?;
            }
            return Ok(summarize(&r, "page"));
        }
        Command::Bt {
            graph,
            max_pages,
            budget,
        } => {
            let g = load(&graph, parse_graph)?;
            let max_pages = max_pages.unwrap_or(g.vertex_count().div_ceil(2)).max(1);
            return Ok(match book_thickness_exact(&g, max_pages, budget)? {
                BookThickness::Exact { value, .. } => {
                    println!("{value}");
                    ExitCode::SUCCESS
                }
                BookThickness::Unknown { lower_bound } => {
                    println!("unknown (at least {lower_bound})");
                    ExitCode::from(1)
                }
            });
        }
        Command::Audit { k, book, report } => {
            let gk = build_gk(k)?;
            let be = match book {
                Some(path) => load(&path, parse_book)?,
                None => sqrt_book_layout(k, None)?,
            };
            let audit = separation_audit(&gk, &be)?;
            if !audit.input.valid {
                eprintln!(
                    "warning: the embedding has {} conflicts",
                    audit.input.conflicts.len()
                );
            }
            let file = AuditFile::from(&audit);
            match report {
                Some(path) => write_json(&path, &file)?,
                None => print!("{}", to_json(&file)),
            }
            return Ok(verdict_code(
                audit.verdict == Verdict::ConsistentWithTheorem3,
            ));
        }
        Command::Render {
            graph,
            drawing,
            book,
            out,
            highlight_conflicts,
        } => {
            let g = load(&graph, parse_graph)?;
            let style = RenderStyle {
                highlight_conflicts,
                ..RenderStyle::default()
            };
            let (d, style) = match (drawing, book) {
                (Some(path), _) => (load(&path, parse_drawing)?, style),
                (None, Some(path)) => {
                    let d = embed_on_circle(&g, &load(&path, parse_book)?)?;
                    let style = style.fit(&d, MAX_BOOK_PIXELS);
                    (d, style)
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let svg = render_svg(&g, &d, &style)?;
            let r = validate_layered_drawing(&g, &d)?;
            if !r.valid {
                eprintln!(
                    "warning: rendering an invalid drawing with {} conflicts",
                    r.conflicts.len()
                );
            }
            write(&out, &svg)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
