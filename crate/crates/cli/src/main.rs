use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use twodisc::io::{parse_vertices, write_vertices, Format};
use twodisc::report::{bench, ratio_report, DEFAULT_M};
use twodisc::svg::render_svg;
use twodisc::{
    batch_cover, gen_random_convex, gen_regular, gen_square_diamond, polygon_covered,
    ConvexPolygon, CoverSolution, Point, StreamState, EPS_GEOM,
};

#[derive(Parser)]
#[command(
    name = "twodisc",
    version,
    about = "Cover a convex polygon with two congruent disks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Stream,
    Batch,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Regular,
    Random,
    SquareDiamond,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a two-disk cover and print it as JSON.
    Cover {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Vertex file, or `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// `json` or `-` for stdout, anything else is a file path.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Check a cover; exits 2 when some boundary point is uncovered.
    Verify {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long, default_value_t = EPS_GEOM)]
        eps: f64,
    },
    /// Compare both covers with the lower-bound certificate and the sampled optimum.
    Ratio {
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_M)]
        m: usize,
        /// Worker threads for the oracle; 1 runs it sequentially.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Emit a polygon as CSV.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex count (ignored for square-diamond, which always has 4).
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// RNG seed; for square-diamond it picks the b-position, 0 being the |ab| = 1 extreme.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw a polygon and its cover as SVG.
    Render {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time both algorithms over growing inputs.
    Bench {
        /// Comma-separated sizes; scientific notation accepted.
        #[arg(long = "n-list", default_value = "1e3,1e4,1e5")]
        n_list: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn sniff(path: &str, text: &str, explicit: Option<FormatArg>) -> Format {
    match explicit {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        None if path.ends_with(".json") || text.trim_start().starts_with('{') => Format::Json,
        None => Format::Csv,
    }
}

fn load_points(path: &str, explicit: Option<FormatArg>) -> Result<Vec<Point>> {
    let text = read_input(path)?;
    let fmt = sniff(path, &text, explicit);
    Ok(parse_vertices(&text, fmt)?)
}

fn load_polygon(path: &str) -> Result<ConvexPolygon> {
    Ok(ConvexPolygon::validate(&load_points(path, None)?)?)
}

fn load_solution(path: &Path) -> Result<CoverSolution> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing solution {}", path.display()))
}

/// Feeds vertices into the constant-size stream state. CSV is consumed line
/// by line; JSON has to be read whole.
fn stream_input(
    mut reader: Box<dyn BufRead>,
    path: &str,
    explicit: Option<FormatArg>,
) -> Result<StreamState> {
    let mut state = StreamState::new();
    let mut line = String::new();
    let mut line_no = 0;
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        line_no += 1;
        if line_no == 1 && sniff(path, &line, explicit) == Format::Json {
            reader.read_to_string(&mut line)?;
            for p in parse_vertices(&line, Format::Json)? {
                state.push(p)?;
            }
            return Ok(state);
        }
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let pts = parse_vertices(text, Format::Csv).map_err(|e| anyhow!("line {line_no}: {e}"))?;
        for p in pts {
            state.push(p)?;
        }
    }
    Ok(state)
}

fn emit(out: &str, body: &str) -> Result<()> {
    if out == "-" || out == "json" {
        let mut stdout = io::stdout().lock();
        writeln!(stdout, "{body}")?;
    } else {
        fs::write(out, format!("{body}\n")).with_context(|| format!("writing {out}"))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cover {
            mode,
            input,
            format,
            out,
        } => {
            let sol = match mode {
                Mode::Stream => {
                    let reader: Box<dyn BufRead> = if input == "-" {
                        Box::new(BufReader::new(io::stdin()))
                    } else {
                        Box::new(BufReader::new(
                            fs::File::open(&input).with_context(|| format!("reading {input}"))?,
                        ))
                    };
                    stream_input(reader, &input, format)?.finalize()?
                }
                Mode::Batch => {
                    let pts = load_points(&input, format)?;
                    batch_cover(&ConvexPolygon::validate(&pts)?)?
                }
            };
            emit(&out, &serde_json::to_string_pretty(&sol)?)?;
        }
        Command::Verify {
            input,
            solution,
            eps,
        } => {
            if eps.is_nan() || eps < 0.0 {
                bail!("--eps must be non-negative");
            }
            let p = load_polygon(&input)?;
            let sol = load_solution(&solution)?;
            let res = polygon_covered(&p, &sol, eps);
            match res.witness {
                None => println!("covered"),
                Some(w) => {
                    println!("not covered: witness ({}, {})", w.x, w.y);
                    return Ok(ExitCode::from(2));
                }
            }
        }
        Command::Ratio { input, m, threads } => {
            let p = load_polygon(&input)?;
            let report = if threads > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()?;
                pool.install(|| ratio_report(&p, m, true))?
            } else {
                ratio_report(&p, m, false)?
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Gen { kind, n, seed } => {
            let p = match kind {
                Kind::Regular => gen_regular(n, 1.0)?,
                Kind::Random => gen_random_convex(n, seed)?,
                Kind::SquareDiamond => gen_square_diamond(1.0 - (seed % 101) as f64 / 100.0)?,
            };
            print!("{}", write_vertices(p.vertices(), Format::Csv));
        }
        Command::Render {
            input,
            solution,
            out,
        } => {
            let p = load_polygon(&input)?;
            let sol = load_solution(&solution)?;
            fs::write(&out, render_svg(&p, &sol))
                .with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Bench { n_list, seed } => {
            let sizes = n_list
                .split(',')
                .map(|s| {
                    let v: f64 = s
                        .trim()
                        .parse()
                        .with_context(|| format!("bad size {s:?}"))?;
                    if !(v >= 1.0 && v.fract() == 0.0 && v < 1e9) {
                        bail!("size {s:?} must be a positive integer");
                    }
                    Ok(v as usize)
                })
                .collect::<Result<Vec<_>>>()?;
            println!("{}", serde_json::to_string_pretty(&bench(&sizes, seed)?)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
