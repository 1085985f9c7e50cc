//! The `colorful` command line.
//!
//! Exit status is 0 on success or a positive answer, 1 on a negative answer
//! (not colorful, no certificate, no intersection, …) and 2 on usage or
//! input errors. Internal parallelism is set by the `COLORFUL_THREADS`
//! environment variable and defaults to one thread.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::complex::Vertex;
use crate::error::Error;
use crate::format;
use crate::gd::{build_gd, search_word, GdParams};
use crate::geometry::{
    convex_hull_witness, in_general_position, in_strong_general_position, moment_curve, Rational,
};
use crate::tverberg::{
    colorful_minimality_check, enumerate_minimal_tverberg, extend_partition_for_cone,
    find_tverberg_partition, nerve, partition_to_word, word_to_partition,
};
use crate::words::{
    canonical_word, chunks, delete_letter, delta_complex, facet_concat_word, find_colorful_subword,
    is_colorful, lift_word, minimize_letter,
};

pub const THREADS_ENV: &str = "COLORFUL_THREADS";

#[derive(Parser, Debug)]
#[command(name = "colorful", version, about = "Colorful words, exact geometry and Tverberg partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on a word read from stdin.
    #[command(subcommand)]
    Word(WordCmd),
    /// Complexes on stdin.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Words with prescribed colorful complexes.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Exact point geometry.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Tverberg partitions and nerves.
    #[command(subcommand)]
    Tverberg(TverbergCmd),
    /// The graphs G_d and bounded word search.
    #[command(subcommand)]
    Graph(GraphCmd),
}

#[derive(Args, Debug)]
struct Dim {
    /// Dimension d.
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand, Debug)]
enum WordCmd {
    /// Is the word d-colorful on its alphabet?
    Check(Dim),
    /// Least certificate of a d-colorful subword on alphabet SIGMA.
    Find {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        sigma: String,
    },
    /// Facets of the complex of colorful subword alphabets.
    Delta(Dim),
    /// Collapse runs of repeated letters.
    Reduce,
    /// Keep only letters of TAU.
    Restrict {
        #[arg(long)]
        tau: String,
    },
    /// Maximal runs of one letter after restricting to A, as "letter start end".
    Chunks {
        #[arg(long)]
        a: String,
    },
    /// Delete occurrences of B while the complex stays the same.
    Minimize {
        #[arg(long)]
        b: Vertex,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ComplexCmd {
    /// Is SIGMA a face?
    Face {
        #[arg(long)]
        sigma: String,
    },
    /// Subcomplex induced on TAU.
    Induced {
        #[arg(long)]
        tau: String,
    },
    /// Cone apices, or exit 1 if there are none.
    Cone,
    /// The 1-skeleton.
    Skeleton,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// The canonical d-colorful word on SIGMA.
    Canonical {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        d: usize,
    },
    /// A word representing the complex in FILE; prints the dimension to stderr.
    Facets {
        #[arg(long)]
        file: String,
    },
    /// Lift a word one dimension up; the relabeling goes to stderr.
    Lift,
    /// Delete letter I from a colorful word, keeping it colorful.
    Delete {
        #[arg(long)]
        i: Vertex,
    },
}

#[derive(Subcommand, Debug)]
enum GeomCmd {
    /// N points on the moment curve at parameters BASE^1, …, BASE^N.
    Moment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "2")]
        base: String,
    },
    /// Are the points on stdin in general position?
    Gp,
    /// Are the points on stdin in strong general position?
    Sgp,
    /// A common point of the convex hulls in a parts file.
    Intersect {
        #[arg(long)]
        parts: String,
    },
}

#[derive(Args, Debug)]
struct PointsArg {
    /// Points file; stdin when absent.
    #[arg(long)]
    points: Option<String>,
}

#[derive(Subcommand, Debug)]
enum TverbergCmd {
    /// Nerve of the hulls of a partition.
    Nerve {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        partition: String,
    },
    /// All minimal Tverberg partitions with R parts.
    Minimal {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        r: usize,
    },
    /// Are the minimal Tverberg partitions exactly the d-colorful ones?
    ColorfulCheck {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rmax: usize,
    },
    /// First Tverberg partition with R parts.
    Find {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        r: usize,
    },
    /// Partition of the points by the word on stdin.
    Word2part {
        #[arg(long)]
        points: String,
    },
    /// Word of a partition, reading labels in point order.
    Part2word {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        partition: String,
    },
    /// Cover all points while keeping the nerve, which must be a cone.
    Extend {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        complex: String,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// The bipartite graph G_d.
    Gd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        mult: usize,
    },
    /// Least word of length at most MAX_LEN representing the complex in FILE.
    Search {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        file: String,
    },
}

struct Outcome {
    out: String,
    err: String,
    code: i32,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome {
            out,
            err: String::new(),
            code: 0,
        }
    }

    fn answer(yes: bool, positive: &str, negative: &str) -> Self {
        Outcome {
            out: format!("{}\n", if yes { positive } else { negative }),
            err: String::new(),
            code: if yes { 0 } else { 1 },
        }
    }

    fn none() -> Self {
        Outcome::answer(false, "", "none")
    }
}

/// Failure carrying a single-line diagnostic for exit status 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type CliResult = std::result::Result<Outcome, Usage>;

/// Standard input, read up front for commands that use it.
struct Io {
    stdin: Option<String>,
}

impl Io {
    fn stdin(&mut self) -> std::result::Result<String, Usage> {
        Ok(self.stdin.take().unwrap_or_default())
    }

    fn file_or_stdin(&mut self, path: &Option<String>) -> std::result::Result<String, Usage> {
        match path {
            Some(p) => read_file(p),
            None => self.stdin(),
        }
    }
}

fn read_file(path: &str) -> std::result::Result<String, Usage> {
    std::fs::read_to_string(path).map_err(|e| Usage(format!("reading {path}: {e}")))
}

fn in_context(path: &str, e: Error) -> Usage {
    Usage(format!("{path}: {e}"))
}

fn threads() -> std::result::Result<usize, Usage> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let result = threads().and_then(|n| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Usage(format!("thread pool: {e}")))?;
        let mut io = Io {
            stdin: if reads_stdin(&cli.command) {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Usage(format!("reading stdin: {e}")))?;
                Some(s)
            } else {
                None
            },
        };
        pool.install(|| dispatch(cli.command, &mut io))
    });
    match result {
        Ok(o) => {
            let _ = stdout.write_all(o.out.as_bytes());
            let _ = stderr.write_all(o.err.as_bytes());
            o.code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {}", msg.replace('\n', " "));
            2
        }
    }
}

fn reads_stdin(cmd: &Command) -> bool {
    match cmd {
        Command::Word(_) | Command::Complex(_) => true,
        Command::Construct(c) => matches!(c, ConstructCmd::Lift | ConstructCmd::Delete { .. }),
        Command::Geom(c) => matches!(c, GeomCmd::Gp | GeomCmd::Sgp),
        Command::Tverberg(c) => match c {
            TverbergCmd::Word2part { .. } => true,
            TverbergCmd::Nerve { points, .. }
            | TverbergCmd::Minimal { points, .. }
            | TverbergCmd::ColorfulCheck { points, .. }
            | TverbergCmd::Find { points, .. }
            | TverbergCmd::Part2word { points, .. }
            | TverbergCmd::Extend { points, .. } => points.points.is_none(),
        },
        Command::Graph(_) => false,
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> CliResult {
    match cmd {
        Command::Word(c) => word(c, io),
        Command::Complex(c) => complex(c, io),
        Command::Construct(c) => construct(c, io),
        Command::Geom(c) => geom(c, io),
        Command::Tverberg(c) => tverberg(c, io),
        Command::Graph(c) => graph(c),
    }
}

fn word(cmd: WordCmd, io: &mut Io) -> CliResult {
    let w = format::parse_word(&io.stdin()?)?;
    Ok(match cmd {
        WordCmd::Check(Dim { d }) => Outcome::answer(is_colorful(&w, d), "colorful", "not colorful"),
        WordCmd::Find { d, sigma } => {
            match find_colorful_subword(&w, &format::parse_face(&sigma)?, d)? {
                Some(c) => Outcome::ok(format::render_certificate(&c)),
                None => Outcome::none(),
            }
        }
        WordCmd::Delta(Dim { d }) => Outcome::ok(format::render_complex(&delta_complex(&w, d))),
        WordCmd::Reduce => Outcome::ok(format::render_word(&w.reduce())),
        WordCmd::Restrict { tau } => {
            Outcome::ok(format::render_word(&w.restrict(&format::parse_face(&tau)?)))
        }
        WordCmd::Chunks { a } => {
            let mut out = String::new();
            for c in chunks(&w, &format::parse_face(&a)?) {
                out.push_str(&format!("{} {} {}\n", c.letter, c.start + 1, c.end));
            }
            Outcome::ok(out)
        }
        WordCmd::Minimize { b, d } => Outcome::ok(format::render_word(&minimize_letter(&w, b, d)?)),
    })
}

fn complex(cmd: ComplexCmd, io: &mut Io) -> CliResult {
    let k = format::parse_complex(&io.stdin()?)?;
    Ok(match cmd {
        ComplexCmd::Face { sigma } => {
            Outcome::answer(k.is_face(&format::parse_face(&sigma)?), "face", "not a face")
        }
        ComplexCmd::Induced { tau } => {
            Outcome::ok(format::render_complex(&k.induced(&format::parse_face(&tau)?)))
        }
        ComplexCmd::Cone => {
            let apices = k.cone_vertices();
            if apices.is_empty() {
                Outcome::answer(false, "", "not a cone")
            } else {
                Outcome::ok(format!("{apices}\n"))
            }
        }
        ComplexCmd::Skeleton => Outcome::ok(format::render_complex(&k.one_skeleton())),
    })
}

fn construct(cmd: ConstructCmd, io: &mut Io) -> CliResult {
    Ok(match cmd {
        ConstructCmd::Canonical { sigma, d } => {
            Outcome::ok(format::render_word(&canonical_word(&format::parse_face(&sigma)?, d)?))
        }
        ConstructCmd::Facets { file } => {
            let k = format::parse_complex(&read_file(&file)?).map_err(|e| in_context(&file, e))?;
            let mut o = Outcome::ok(format::render_word(&facet_concat_word(&k)));
            o.err = format!("dimension: {}\n", crate::words::facet_concat_dimension(&k));
            o
        }
        ConstructCmd::Lift => {
            let (w, relabel) = lift_word(&format::parse_word(&io.stdin()?)?);
            let mut o = Outcome::ok(format::render_word(&w));
            let pairs: Vec<String> = relabel.pairs().map(|(a, b)| format!("{a}->{b}")).collect();
            o.err = format!("relabel: {}\n", pairs.join(" "));
            o
        }
        ConstructCmd::Delete { i } => {
            Outcome::ok(format::render_word(&delete_letter(&format::parse_word(&io.stdin()?)?, i)?))
        }
    })
}

fn geom(cmd: GeomCmd, io: &mut Io) -> CliResult {
    Ok(match cmd {
        GeomCmd::Moment { n, d, base } => {
            let base: Rational = format::parse_rational(&base).map_err(Usage)?;
            Outcome::ok(format::render_points(&moment_curve(n, d, &base)?))
        }
        GeomCmd::Gp => {
            let p = format::parse_points(&io.stdin()?)?;
            Outcome::answer(in_general_position(&p), "general position", "not in general position")
        }
        GeomCmd::Sgp => {
            let p = format::parse_points(&io.stdin()?)?;
            Outcome::answer(
                in_strong_general_position(&p)?,
                "strong general position",
                "not in strong general position",
            )
        }
        GeomCmd::Intersect { parts } => {
            let sets = format::parse_parts(&read_file(&parts)?).map_err(|e| in_context(&parts, e))?;
            match convex_hull_witness(&sets)? {
                Some(w) => Outcome::ok(format!("{}\n", w.point)),
                None => Outcome::none(),
            }
        }
    })
}

fn tverberg(cmd: TverbergCmd, io: &mut Io) -> CliResult {
    let points = |io: &mut Io, arg: &PointsArg| -> std::result::Result<_, Usage> {
        let text = io.file_or_stdin(&arg.points)?;
        format::parse_points(&text).map_err(|e| match &arg.points {
            Some(p) => in_context(p, e),
            None => e.into(),
        })
    };
    let partition = |path: &str| -> std::result::Result<_, Usage> {
        format::parse_partition(&read_file(path)?).map_err(|e| in_context(path, e))
    };
    Ok(match cmd {
        TverbergCmd::Nerve { points: p, partition: f } => {
            let seq = points(io, &p)?;
            Outcome::ok(format::render_complex(&nerve(&seq, &partition(&f)?)?))
        }
        TverbergCmd::Minimal { points: p, r } => {
            let seq = points(io, &p)?;
            check_parts(r)?;
            let all = enumerate_minimal_tverberg(&seq, r);
            let blocks: Vec<String> = all.iter().map(format::render_witness).collect();
            Outcome::ok(blocks.join("\n"))
        }
        TverbergCmd::ColorfulCheck { points: p, d, rmax } => {
            let seq = points(io, &p)?;
            check_parts(rmax)?;
            Outcome::answer(
                colorful_minimality_check(&seq, d, rmax),
                "colorfully minimal",
                "not colorfully minimal",
            )
        }
        TverbergCmd::Find { points: p, r } => {
            let seq = points(io, &p)?;
            check_parts(r)?;
            match find_tverberg_partition(&seq, r) {
                Some(w) => Outcome::ok(format::render_witness(&w)),
                None => Outcome::none(),
            }
        }
        TverbergCmd::Word2part { points: p } => {
            let seq = points(io, &PointsArg { points: Some(p) })?;
            let w = format::parse_word(&io.stdin()?)?;
            Outcome::ok(format::render_partition(&word_to_partition(&w, &seq)?))
        }
        TverbergCmd::Part2word { points: p, partition: f } => {
            let seq = points(io, &p)?;
            Outcome::ok(format::render_word(&partition_to_word(&seq, &partition(&f)?)?))
        }
        TverbergCmd::Extend {
            points: p,
            partition: f,
            complex,
        } => {
            let seq = points(io, &p)?;
            let k = format::parse_complex(&read_file(&complex)?).map_err(|e| in_context(&complex, e))?;
            Outcome::ok(format::render_partition(&extend_partition_for_cone(
                &k,
                &seq,
                &partition(&f)?,
            )?))
        }
    })
}

fn check_parts(r: usize) -> std::result::Result<(), Usage> {
    if r < 2 {
        return Err(Usage("the number of parts must be at least 2".into()));
    }
    Ok(())
}

fn graph(cmd: GraphCmd) -> CliResult {
    Ok(match cmd {
        GraphCmd::Gd { n, d, mult } => {
            let g = build_gd(GdParams::new(n, d, mult)?)?;
            Outcome::ok(format::render_complex(&g.complex))
        }
        GraphCmd::Search { d, max_len, file } => {
            let k = format::parse_complex(&read_file(&file)?).map_err(|e| in_context(&file, e))?;
            match search_word(&k, d, max_len)? {
                Some(w) => Outcome::ok(format::render_word(&w)),
                None => Outcome::none(),
            }
        }
    })
}
