//! Job documents, command dispatch, text/JSON rendering and the on-disk
//! result cache behind the command-line tool.
//!
//! A job document is line oriented; `#` starts a comment:
//!
//! ```text
//! field p=2 r=2 modulus=1,1,1 basis=a,1
//! parity a a^3 a^2
//! ```
//!
//! Field elements are written `0`, `a`, `a^K` with `1 <= K <= q-1`, `1`, or
//! an integer `0..p-1` standing for an element of the prime field.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::binomial::{Binomial, BinomialSet, ExponentVector, VariableSpace};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Word};
use crate::generators::IdealKind;
use crate::graver::{
    code_ideal_groebner, code_matrix, code_toric_ideal, extended_code_matrix, graver, graver_bruteforce,
};
use crate::matrices::{lawrence_lift, IntMatrix, LinearCode};
use crate::order::MonomialOrder;
use crate::universal::{universal_basis, universal_basis_char2};

/// Version tag of the JSON result documents and cache entries.
pub const SCHEMA: &str = "codeideal-result/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Matrix,
    Toric,
    Rgb,
    Graver,
    Ugb,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderChoice {
    Lex,
    #[default]
    Degrevlex,
}

impl OrderChoice {
    pub fn order(self) -> MonomialOrder {
        match self {
            OrderChoice::Lex => MonomialOrder::lex(),
            OrderChoice::Degrevlex => MonomialOrder::degrevlex(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixRole {
    Parity,
    Generator,
}

macro_rules! lowercase_names {
    ($ty:ty { $($variant:ident => $name:literal),* $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $(Self::$variant => $name),* }
            }
        }
        impl FromStr for $ty {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s { $($name => Ok(Self::$variant),)* _ => Err(format!("unknown value `{s}`")) }
            }
        }
    };
}

lowercase_names!(Command { Matrix => "matrix", Toric => "toric", Rgb => "rgb", Graver => "graver", Ugb => "ugb", Verify => "verify" });
lowercase_names!(OrderChoice { Lex => "lex", Degrevlex => "degrevlex" });
lowercase_names!(OutputFormat { Text => "text", Json => "json" });
lowercase_names!(MatrixRole { Parity => "parity", Generator => "generator" });

impl FromStr for IdealKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ordinary" => Ok(IdealKind::Ordinary),
            "generalized" => Ok(IdealKind::Generalized),
            _ => Err(format!("unknown ideal kind `{s}`")),
        }
    }
}

/// Field parameters as written in the job document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub r: u32,
    pub modulus: Vec<u32>,
    pub basis: Option<Vec<String>>,
}

/// Matrix rows as written in the job document, normalized to canonical tokens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDescriptor {
    pub role: MatrixRole,
    pub rows: Vec<Vec<String>>,
}

/// Everything needed to run one command.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub field: FiniteField,
    pub descriptor: FieldDescriptor,
    pub role: MatrixRole,
    pub rows: Vec<Word>,
    pub n: usize,
    pub command: Command,
    pub kind: IdealKind,
    pub order: OrderChoice,
    pub format: OutputFormat,
    pub shortcut_char2: bool,
}

impl JobSpec {
    pub fn code(&self) -> Result<LinearCode> {
        match self.role {
            MatrixRole::Parity => LinearCode::from_parity(self.field.clone(), self.n, self.rows.clone()),
            MatrixRole::Generator => LinearCode::from_generator(self.field.clone(), self.n, self.rows.clone()),
        }
    }

    pub fn matrix_descriptor(&self) -> MatrixDescriptor {
        MatrixDescriptor {
            role: self.role,
            rows: self.rows.iter().map(|r| r.iter().map(|&a| self.field.format_element(a)).collect()).collect(),
        }
    }

    /// Content hash identifying the result of this job.
    pub fn cache_key(&self) -> String {
        let key = serde_json::json!({
            "schema": SCHEMA,
            "p": self.descriptor.p,
            "r": self.descriptor.r,
            "modulus": self.descriptor.modulus,
            "basis": self.field.basis().iter().map(|&b| self.field.code(b)).collect::<Vec<_>>(),
            "role": self.role,
            "rows": self.rows.iter().map(|r| r.iter().map(|&a| self.field.code(a)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "command": self.command,
            "order": self.order,
            "kind": self.kind,
            "shortcut_char2": self.shortcut_char2,
        });
        hex::encode(Sha256::digest(key.to_string().as_bytes()))
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Splits a line into tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Parses a field element token; `q` bounds the exponent of `a^K`.
pub fn parse_element(ff: &FiniteField, token: &str) -> Option<FieldElement> {
    let q = ff.q();
    match token {
        "a" => Some(ff.alpha_pow(1)),
        _ => {
            if let Some(k) = token.strip_prefix("a^") {
                let k: u32 = k.parse().ok()?;
                (1..q).contains(&k).then_some(FieldElement::Power(k))
            } else {
                let c: u32 = token.parse().ok()?;
                (c < ff.p()).then(|| ff.from_int(c as i64))
            }
        }
    }
}

fn parse_u32_list(value: &str, line: usize, column: usize) -> Result<Vec<u32>> {
    value
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| parse_error(line, column, format!("`{s}` is not a nonnegative integer"))))
        .collect()
}

/// Parses a job document with default options (`graver`, ordinary ideal,
/// degrevlex, text output).
pub fn parse_input(text: &str) -> Result<JobSpec> {
    let mut field: Option<(FiniteField, FieldDescriptor)> = None;
    let mut parity: Vec<Word> = Vec::new();
    let mut generator: Vec<Word> = Vec::new();
    let mut width: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, key)) = toks.first() else { continue };
        match key {
            "field" => {
                if field.is_some() {
                    return Err(parse_error(line_no, col, "duplicate `field` line"));
                }
                let (mut p, mut r, mut modulus, mut basis) = (None, None, None, None);
                for &(c, kv) in &toks[1..] {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| parse_error(line_no, c, format!("expected key=value, got `{kv}`")))?;
                    match k {
                        "p" => {
                            p = Some(
                                v.parse::<u32>()
                                    .map_err(|_| parse_error(line_no, c, "p must be a positive integer"))?,
                            )
                        }
                        "r" => {
                            r = Some(
                                v.parse::<u32>()
                                    .map_err(|_| parse_error(line_no, c, "r must be a positive integer"))?,
                            )
                        }
                        "modulus" => modulus = Some(parse_u32_list(v, line_no, c)?),
                        "basis" => basis = Some((c, v.split(',').map(str::to_string).collect::<Vec<_>>())),
                        _ => return Err(parse_error(line_no, c, format!("unknown field key `{k}`"))),
                    }
                }
                let p = p.ok_or_else(|| parse_error(line_no, col, "missing p="))?;
                let r = r.ok_or_else(|| parse_error(line_no, col, "missing r="))?;
                let modulus = modulus.ok_or_else(|| parse_error(line_no, col, "missing modulus="))?;
                let field_err = |e: Error| parse_error(line_no, col, e.to_string());
                let plain = FiniteField::new(p, r, &modulus, None).map_err(field_err)?;
                let ff = match &basis {
                    None => plain,
                    Some((c, toks)) => {
                        let elems = toks
                            .iter()
                            .map(|t| {
                                parse_element(&plain, t).ok_or_else(|| Error::BadElementToken {
                                    token: t.clone(),
                                    line: line_no,
                                    column: *c,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        FiniteField::new(p, r, &modulus, Some(&elems)).map_err(field_err)?
                    }
                };
                let descriptor = FieldDescriptor { p, r, modulus, basis: basis.map(|(_, b)| b) };
                field = Some((ff, descriptor));
            }
            "parity" | "generator" => {
                let (ff, _) =
                    field.as_ref().ok_or_else(|| parse_error(line_no, col, "`field` must come before matrix rows"))?;
                let row = toks[1..]
                    .iter()
                    .map(|&(c, t)| {
                        parse_element(ff, t).ok_or_else(|| Error::BadElementToken {
                            token: t.to_string(),
                            line: line_no,
                            column: c,
                        })
                    })
                    .collect::<Result<Word>>()?;
                if row.is_empty() {
                    return Err(parse_error(line_no, col, "empty matrix row"));
                }
                match width {
                    Some(w) if w != row.len() => {
                        return Err(Error::InconsistentDimensions(format!(
                            "line {line_no} has {} entries, earlier rows have {w}",
                            row.len()
                        )))
                    }
                    _ => width = Some(row.len()),
                }
                if key == "parity" {
                    parity.push(row)
                } else {
                    generator.push(row)
                }
            }
            _ => return Err(parse_error(line_no, col, format!("unknown keyword `{key}`"))),
        }
    }

    let (field, descriptor) = field.ok_or_else(|| parse_error(1, 1, "missing `field` line"))?;
    let (role, rows) = match (parity.is_empty(), generator.is_empty()) {
        (false, true) => (MatrixRole::Parity, parity),
        (true, false) => (MatrixRole::Generator, generator),
        (true, true) => return Err(parse_error(text.lines().count().max(1), 1, "no `parity` or `generator` rows")),
        (false, false) => {
            return Err(Error::InconsistentDimensions("give either parity or generator rows, not both".into()))
        }
    };
    Ok(JobSpec {
        field,
        descriptor,
        role,
        n: width.unwrap_or(0),
        rows,
        command: Command::Graver,
        kind: IdealKind::Ordinary,
        order: OrderChoice::default(),
        format: OutputFormat::default(),
        shortcut_char2: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub agree: bool,
    pub pipeline_count: usize,
    pub oracle_count: usize,
    pub missing_from_pipeline: Vec<(Vec<u32>, Vec<u32>)>,
    pub missing_from_oracle: Vec<(Vec<u32>, Vec<u32>)>,
}

/// The serialized result of a command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub command: Command,
    pub kind: IdealKind,
    pub order: OrderChoice,
    pub field: FieldDescriptor,
    pub matrix: MatrixDescriptor,
    pub variables: Vec<String>,
    pub count: usize,
    /// Exponent pairs `[u, v]` standing for `x^u - x^v`.
    pub binomials: Vec<(Vec<u32>, Vec<u32>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub matrices: Vec<NamedMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
    space: Option<VariableSpace>,
}

impl ResultDocument {
    fn new(job: &JobSpec) -> Self {
        ResultDocument {
            schema: SCHEMA.to_string(),
            command: job.command,
            kind: job.kind,
            order: job.order,
            field: job.descriptor.clone(),
            matrix: job.matrix_descriptor(),
            variables: Vec::new(),
            count: 0,
            binomials: Vec::new(),
            matrices: Vec::new(),
            verify: None,
            space: None,
        }
    }

    fn with_set(mut self, set: &BinomialSet) -> Self {
        let space = set.space();
        self.variables = (0..space.dim()).map(|i| space.var_name(i)).collect();
        self.count = set.len();
        self.binomials = set.iter().map(pair).collect();
        self.space = Some(space.clone());
        self
    }

    /// The binomials as a set over the recorded variable space.
    pub fn binomial_set(&self) -> Option<BinomialSet> {
        let space = self.space.clone()?;
        Some(BinomialSet::new(
            space,
            self.binomials
                .iter()
                .map(|(u, v)| Binomial::new(ExponentVector::new(u.clone()), ExponentVector::new(v.clone()))),
        ))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents always serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.matrices {
            let _ = writeln!(out, "# {}", m.name);
            for row in &m.rows {
                let _ = writeln!(out, "{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
        }
        if let Some(v) = &self.verify {
            let _ = writeln!(out, "# agree: {}", if v.agree { "yes" } else { "no" });
            let _ = writeln!(out, "# pipeline: {}, oracle: {}", v.pipeline_count, v.oracle_count);
        }
        if let Some(set) = self.binomial_set() {
            out.push_str(&set.to_string());
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

fn pair(b: &Binomial) -> (Vec<u32>, Vec<u32>) {
    (b.lhs.to_vec(), b.rhs.to_vec())
}

/// Parses a JSON result document produced by [`ResultDocument::to_json`].
pub fn parse_result_json(text: &str) -> Result<ResultDocument> {
    let doc: ResultDocument = serde_json::from_str(text)?;
    if doc.schema != SCHEMA {
        return Err(Error::InvalidCode(format!("unsupported result schema `{}`", doc.schema)));
    }
    Ok(doc)
}

fn named(name: &str, m: &IntMatrix) -> NamedMatrix {
    NamedMatrix { name: name.to_string(), rows: m.to_rows() }
}

/// Runs the job's command.
pub fn run(job: &JobSpec) -> Result<ResultDocument> {
    let code = job.code()?;
    let order = job.order.order();
    let doc = ResultDocument::new(job);
    let p = job.field.p() as i64;
    Ok(match job.command {
        Command::Matrix => {
            let (base, ext, lift) = match job.kind {
                IdealKind::Ordinary => ("H_e", "H(q)", "Lawrence(H_e)"),
                IdealKind::Generalized => ("H_+e", "H_+(q)", "Lawrence(H_+e)"),
            };
            let m = code_matrix(&code, job.kind);
            ResultDocument {
                matrices: vec![
                    named(base, &m),
                    named(ext, &extended_code_matrix(&code, job.kind)),
                    named(lift, &lawrence_lift(&m, p)),
                ],
                ..doc
            }
        }
        Command::Toric => doc.with_set(&code_toric_ideal(&code, job.kind)?),
        Command::Rgb => doc.with_set(&code_ideal_groebner(&code, job.kind, &order)?.to_set()),
        Command::Graver => doc.with_set(graver(&code, job.kind, &order)?.elements()),
        Command::Ugb => {
            let gr = graver(&code, job.kind, &order)?;
            let applicable = job.kind == IdealKind::Generalized && job.field.p() == 2;
            let u = if job.shortcut_char2 && applicable { universal_basis_char2(&gr)? } else { universal_basis(&gr) };
            doc.with_set(u.elements())
        }
        Command::Verify => {
            // the oracle refuses oversized searches up front, before the pipeline runs
            let oracle = graver_bruteforce(&code, job.kind)?;
            let gr = graver(&code, job.kind, &order)?;
            let missing =
                |a: &BinomialSet, b: &BinomialSet| b.iter().filter(|x| !a.contains(x)).map(pair).collect::<Vec<_>>();
            let report = VerifyReport {
                agree: gr.elements() == oracle.elements(),
                pipeline_count: gr.len(),
                oracle_count: oracle.len(),
                missing_from_pipeline: missing(gr.elements(), oracle.elements()),
                missing_from_oracle: missing(oracle.elements(), gr.elements()),
            };
            ResultDocument { verify: Some(report), ..doc.with_set(gr.elements()) }
        }
    })
}

/// Commands whose results are worth caching.
fn cacheable(command: Command) -> bool {
    matches!(command, Command::Toric | Command::Rgb | Command::Graver | Command::Ugb)
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    schema: String,
    key: String,
    result: ResultDocument,
}

/// Content-addressed store of result documents.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$CODEIDEAL_CACHE_DIR`, else `$XDG_CACHE_HOME/codeideal`, else `~/.cache/codeideal`.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os("CODEIDEAL_CACHE_DIR") {
            return d.into();
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        base.join("codeideal")
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The cached document for `key`; a present but unreadable entry is an error.
    pub fn load(&self, key: &str) -> Result<Option<ResultDocument>> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| Error::CacheCorrupt { path: path.display().to_string(), reason };
        let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if entry.schema != SCHEMA {
            return Err(corrupt(format!("schema `{}`, expected `{SCHEMA}`", entry.schema)));
        }
        if entry.key != key {
            return Err(corrupt("key does not match file name".into()));
        }
        Ok(Some(entry.result))
    }

    /// Writes atomically: a temporary file in the cache directory is renamed into place.
    pub fn store(&self, key: &str, result: &ResultDocument) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry { schema: SCHEMA.to_string(), key: key.to_string(), result: result.clone() };
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(&tmp, self.path_for(key)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(())
    }
}

/// Runs `job`, consulting and filling `cache` when given.
pub fn run_cached(job: &JobSpec, cache: Option<&Cache>) -> Result<ResultDocument> {
    let Some(cache) = cache.filter(|_| cacheable(job.command)) else { return run(job) };
    let key = job.cache_key();
    if let Some(doc) = cache.load(&key)? {
        return Ok(doc);
    }
    let doc = run(job)?;
    cache.store(&key, &doc)?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F3: &str = "# ternary [3,2] code\nfield p=3 r=1 modulus=0,1\nparity 1 2 1\n";
    const F4: &str = "field p=2 r=2 modulus=1,1,1 basis=a,1\nparity a a^3 a^2\n";

    #[test]
    fn parses_documents() {
        let job = parse_input(F3).unwrap();
        assert_eq!((job.field.p(), job.n, job.role), (3, 3, MatrixRole::Parity));
        assert_eq!(job.rows[0], vec![job.field.one(), job.field.from_int(2), job.field.one()]);
        let job = parse_input(F4).unwrap();
        assert_eq!(job.field.basis(), &[FieldElement::Power(1), FieldElement::Power(3)]);
        assert_eq!(job.rows[0], vec![FieldElement::Power(1), FieldElement::Power(3), FieldElement::Power(2)]);
        assert_eq!(job.matrix_descriptor().rows, vec![vec!["a", "1", "a^2"]]);
    }

    #[test]
    fn reports_bad_input() {
        let err = parse_input("field p=2 r=2 modulus=1,1,1\nparity a a^0\n").unwrap_err();
        assert!(matches!(err, Error::BadElementToken { ref token, line: 2, column: 10 } if token == "a^0"), "{err:?}");
        assert!(matches!(
            parse_input("field p=3 r=1 modulus=0,1\nparity 1 2\nparity 1\n"),
            Err(Error::InconsistentDimensions(_))
        ));
        assert!(matches!(parse_input("parity 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_input("field p=4 r=1 modulus=0,1\nparity 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_input("field p=3 r=1 modulus=0,1\nparity 3\n"), Err(Error::BadElementToken { .. })));
        assert!(matches!(
            parse_input("field p=3 r=1 modulus=0,1\nbogus\n"),
            Err(Error::Parse { line: 2, column: 1, .. })
        ));
        assert!(parse_input("field p=3 r=1 modulus=0,1\n").unwrap_err().is_parse_error());
    }

    #[test]
    fn graver_command_and_json_round_trip() {
        let job = parse_input(F3).unwrap();
        let doc = run(&job).unwrap();
        assert_eq!(doc.count, 13);
        let text = doc.to_text();
        assert_eq!(text.lines().count(), 13);
        assert!(text.lines().any(|l| l == "x[1,1]*x[3,1] - x[2,1]"));
        let back = parse_result_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn matrix_and_verify_commands() {
        let mut job = parse_input(F3).unwrap();
        job.command = Command::Matrix;
        let doc = run(&job).unwrap();
        assert_eq!(doc.matrices[0].rows, vec![vec![1, 2, 1]]);
        assert_eq!(doc.matrices[1].rows, vec![vec![1, 2, 1, 3]]);
        assert!(doc.to_text().starts_with("# H_e\n1 2 1\n"));
        job.command = Command::Verify;
        let doc = run(&job).unwrap();
        assert!(doc.verify.as_ref().unwrap().agree);
    }

    #[test]
    fn cache_is_transparent_and_detects_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let job = parse_input(F3).unwrap();
        let fresh = run(&job).unwrap();
        assert_eq!(run_cached(&job, Some(&cache)).unwrap(), fresh);
        let path = cache.path_for(&job.cache_key());
        assert!(path.exists());
        assert_eq!(run_cached(&job, Some(&cache)).unwrap(), fresh);
        fs::write(&path, "{ not json").unwrap();
        assert!(matches!(run_cached(&job, Some(&cache)), Err(Error::CacheCorrupt { .. })));
        let mut other = job.clone();
        other.order = OrderChoice::Lex;
        assert_ne!(other.cache_key(), job.cache_key());
    }
}
