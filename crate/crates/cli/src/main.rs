use clap::{Parser, Subcommand, ValueEnum};
use semicomp::acceptance;
use semicomp::complete::{
    characteristic_cardinality, family_battery, family_label, is_d_complete, is_finitary,
    sequence_battery, sequence_label, CardinalityBound,
};
use semicomp::completion::{
    completeness_report, completion_of_finite, congruence, lesssim_series, nat_completion,
    sim_congruence_battery, PolyBattery, SeriesLesssim,
};
use semicomp::gallery::{self, FiniteSigma, GalleryEntry, NatInfinity, OmegaMinus};
use semicomp::io::{
    matrix_rows, parse_family_json, parse_polynomial, parse_semiring_json, parse_sequence_json,
    parse_series, SemiringDoc,
};
use semicomp::series::series_d_complete_check;
use semicomp::{
    check_ordered_semiring, check_semiring_axioms, is_orderable, is_zero_sum_free,
    natural_quasiorder, search_compatible_order, BatteryConfig, CheckReport, Complete, Error,
    FiniteSemiring, OrderSearch, PartialOrder, Result, Semiring, TruncatedSeries,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "semicomp",
    version,
    about = "Check semirings, complete semirings and their completions"
)]
struct Cli {
    /// Seed for every randomized battery.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Word length bound for truncated series.
    #[arg(long, global = true, default_value_t = 3)]
    maxlen: usize,
    /// Coefficient cap used for `inf` coefficients in `congruence`.
    #[arg(long, global = true, default_value_t = 3)]
    cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Battery sizes: FAMILIES[,SEQUENCES[,TRIPLES]].
    #[arg(long, global = true, default_value = "500,200,300")]
    battery: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semiring axioms, orderability and zero-sum-freeness of a table.
    Check { input: String },
    /// Natural quasiorder, orderability and order search.
    Order { input: String },
    /// The completion: Σ table and finitary report.
    Complete { input: String },
    /// d-completeness on the sequence battery.
    Dcomplete {
        input: String,
        /// JSON file with an extra sequence: {"prefix": [...], "cycle": [...]}.
        #[arg(long)]
        sequence: Option<PathBuf>,
        /// Also check power series over this many letters, truncated at --maxlen.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Finitarity and characteristic cardinalities.
    Finitary {
        input: String,
        /// JSON file with an extra family: {"family": {"<label>": "fin:3" | "aleph0" | "uncountable"}}.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// `p ≲ q` and `q ≲ p` for polynomials or truncated series.
    Congruence { input: String, p: String, q: String },
    /// List gallery names, or describe one.
    Gallery { name: Option<String> },
    /// Run the acceptance suite.
    Selftest,
}

/// A command's result: text lines, a JSON value and an exit code.
struct Output {
    lines: Vec<String>,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(lines: Vec<String>, json: Value) -> Self {
        Output {
            lines,
            json,
            code: 0,
        }
    }

    fn failing_if(mut self, failed: bool) -> Self {
        if failed {
            self.code = 1;
        }
        self
    }
}

/// Exit 1 for mathematical refusals that carry a witness, 2 for input that
/// cannot be processed.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotOrderable { .. }
        | Error::NotZeroSumFree { .. }
        | Error::IncompatibleOrder(_)
        | Error::Inconsistency(_) => 1,
        _ => 2,
    }
}

struct Config {
    cfg: BatteryConfig,
    poly: PolyBattery,
    maxlen: usize,
    cap: u64,
}

fn parse_battery(arg: &str, seed: u64) -> Result<(BatteryConfig, PolyBattery)> {
    let mut cfg = BatteryConfig::with_seed(seed);
    let mut poly = PolyBattery::with_seed(seed);
    let nums: Vec<usize> = arg
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("--battery expects FAMILIES[,SEQUENCES[,TRIPLES]], got `{arg}`"),
        })?;
    if nums.len() > 3 {
        return Err(Error::Parse {
            pos: 0,
            msg: "--battery takes at most three sizes".into(),
        });
    }
    if let Some(&f) = nums.first() {
        cfg.families = f;
    }
    if let Some(&s) = nums.get(1) {
        cfg.sequences = s;
    }
    if let Some(&t) = nums.get(2) {
        poly.triples = t;
    }
    Ok((cfg, poly))
}

/// A command input: a JSON table file or a gallery name.
#[allow(clippy::large_enum_variant)]
enum Subject {
    Table {
        name: String,
        semiring: FiniteSemiring,
        order: Option<PartialOrder>,
        /// The gallery's own `Σ`, when there is one.
        sigma: Option<FiniteSigma>,
    },
    Nat,
    NatInfinity,
    OmegaMinus,
}

fn resolve(input: &str) -> Result<Subject> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|source| Error::Io {
            path: input.to_string(),
            source,
        })?;
        let loaded = parse_semiring_json(&text)?;
        return Ok(Subject::Table {
            name: input.to_string(),
            semiring: loaded.semiring,
            order: loaded.order,
            sigma: None,
        });
    }
    Ok(match gallery::lookup(input)? {
        GalleryEntry::Finite(f) => Subject::Table {
            name: f.name.clone(),
            semiring: f.base.clone(),
            order: f.order.clone(),
            sigma: Some(f),
        },
        GalleryEntry::Nat(_) => Subject::Nat,
        GalleryEntry::NatInfinity(_) => Subject::NatInfinity,
        GalleryEntry::OmegaMinus(_) => Subject::OmegaMinus,
    })
}

fn finite_only(input: &str) -> Result<(String, FiniteSemiring, Option<PartialOrder>)> {
    match resolve(input)? {
        Subject::Table {
            name,
            semiring,
            order,
            ..
        } => Ok((name, semiring, order)),
        _ => Err(Error::Precondition(format!(
            "`{input}` has an infinite carrier; this command needs a finite table"
        ))),
    }
}

fn report_lines(title: &str, r: &CheckReport) -> Vec<String> {
    let mut out = vec![format!(
        "{title}: {} ({} instances checked)",
        if r.passed { "pass" } else { "fail" },
        r.checked
    )];
    for v in r.violations.iter().take(10) {
        out.push(format!("  violation {v}"));
    }
    if r.violations.len() > 10 {
        out.push(format!("  ... {} more", r.violations.len() - 10));
    }
    out
}

fn report_json(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

/// A complete semiring for the `Σ`-based commands. Plain tables get the `Σ`
/// of their completion.
fn with_complete<T>(
    subject: &Subject,
    cfg: &BatteryConfig,
    f: &mut dyn FnMut(&dyn DynComplete) -> Result<T>,
) -> Result<T> {
    match subject {
        Subject::Table { sigma: Some(s), .. } => f(s),
        Subject::Table {
            name,
            semiring,
            order,
            sigma: None,
        } => {
            let ord = is_orderable(semiring)?;
            if let Some(e) = ord.refusal(semiring) {
                return Err(e);
            }
            let o = order
                .clone()
                .or_else(|| ord.order().cloned())
                .expect("orderable");
            let c = completion_of_finite(semiring, &o, name, cfg)?;
            f(&c.semiring)
        }
        Subject::Nat => Err(Error::Precondition(
            "`nat` carries no infinite sums; its completion is `nat-infinity`".into(),
        )),
        Subject::NatInfinity => f(&NatInfinity),
        Subject::OmegaMinus => f(&OmegaMinus),
    }
}

/// The operations the `Σ`-based commands need, object-safe over the element
/// type.
trait DynComplete {
    fn carrier_summary(&self) -> String;
    fn d_complete(
        &self,
        cfg: &BatteryConfig,
        extra: Option<&str>,
    ) -> Result<(Vec<String>, Value, bool)>;
    fn finitary(
        &self,
        cfg: &BatteryConfig,
        extra: Option<&str>,
    ) -> Result<(Vec<String>, Value, bool)>;
    fn series(&self, letters: usize, maxlen: usize, cfg: &BatteryConfig) -> CheckReport;
}

fn resolve_label<C: Complete>(c: &C, label: &str) -> Result<C::Elem> {
    c.carrier()
        .elements()
        .iter()
        .find(|e| c.label(e) == label)
        .cloned()
        .ok_or_else(|| Error::UnknownElement(label.to_string()))
}

impl<C: Complete + Clone> DynComplete for C {
    fn carrier_summary(&self) -> String {
        let c = self.carrier();
        format!(
            "{} elements{}",
            c.elements().len(),
            if c.is_finite() { "" } else { " sampled" }
        )
    }

    fn d_complete(
        &self,
        cfg: &BatteryConfig,
        extra: Option<&str>,
    ) -> Result<(Vec<String>, Value, bool)> {
        let mut seqs = Vec::new();
        if let Some(text) = extra {
            seqs.push(parse_sequence_json(text, |l| resolve_label(self, l))?);
        }
        seqs.extend(sequence_battery(self, cfg));
        let d = is_d_complete(self, &seqs);
        let mut lines = vec![format!(
            "d-complete: {} ({} sequences, {} with constant partial sums, {} undetermined)",
            if d.holds { "yes" } else { "no" },
            d.checked,
            d.constant_tails,
            d.undetermined
        )];
        let witness = d.witness.as_ref().map(|w| {
            let v = json!({
                "sequence": sequence_label(self, &w.sequence),
                "partial_sum": self.label(&w.partial_sum),
                "sigma": self.label(&w.sigma),
            });
            lines.push(format!(
                "  witness {}: partial sums settle at {} but Σ = {}",
                sequence_label(self, &w.sequence),
                self.label(&w.partial_sum),
                self.label(&w.sigma)
            ));
            v
        });
        let json = json!({
            "d_complete": d.holds,
            "checked": d.checked,
            "constant_tails": d.constant_tails,
            "undetermined": d.undetermined,
            "witness": witness,
        });
        Ok((lines, json, d.holds))
    }

    fn finitary(
        &self,
        cfg: &BatteryConfig,
        extra: Option<&str>,
    ) -> Result<(Vec<String>, Value, bool)> {
        let mut fams = Vec::new();
        if let Some(text) = extra {
            fams.push(parse_family_json(text, |l| resolve_label(self, l))?);
        }
        fams.extend(family_battery(self, cfg));
        let f = is_finitary(self, &fams)?;
        let cc = characteristic_cardinality(self, CardinalityBound::default());
        let mut lines = vec![format!(
            "finitary: {} ({} families checked)",
            if f.holds { "yes" } else { "no" },
            f.checked
        )];
        let witness = f.witness.as_ref().map(|w| {
            let sup = match w.sup.sup() {
                Some(x) => self.label(x),
                None => "none".into(),
            };
            lines.push(format!(
                "  witness {}: Σ = {}, sup of finite subsums = {sup}",
                family_label(self, &w.family),
                self.label(&w.sigma)
            ));
            json!({
                "family": family_label(self, &w.family),
                "sigma": self.label(&w.sigma),
                "sup": sup,
            })
        });
        lines.push(format!(
            "λ₁ = {}, λ_S = {}{} (bound λ_S <= max(λ₁, |S|): {})",
            cc.lambda1,
            cc.lambda_s,
            if cc.caveat {
                " over a bounded family space"
            } else {
                ""
            },
            if cc.bound_holds { "holds" } else { "FAILS" }
        ));
        let json = json!({
            "finitary": f.holds,
            "checked": f.checked,
            "witness": witness,
            "characteristic": cc,
        });
        Ok((lines, json, f.holds && cc.bound_holds))
    }

    fn series(&self, letters: usize, maxlen: usize, cfg: &BatteryConfig) -> CheckReport {
        series_d_complete_check(self, letters, maxlen, cfg)
    }
}

fn cmd_check(input: &str) -> Result<Output> {
    let (name, s, _) = finite_only(input)?;
    let axioms = check_semiring_axioms(&s);
    let mut lines = vec![format!("semiring {name} with {} elements", s.size())];
    lines.extend(report_lines("semiring axioms", &axioms));
    let mut json = json!({
        "name": name,
        "elements": s.labels(),
        "axioms": report_json(&axioms),
    });
    if !axioms.passed {
        return Ok(Output::ok(lines, json).failing_if(true));
    }
    let q = natural_quasiorder(&s);
    let ord = is_orderable(&s)?;
    let zsf = is_zero_sum_free(&s);
    lines.push("natural quasiorder (row a, column b: a <= b):".into());
    lines.extend(matrix_rows(&q).into_iter().map(|r| format!("  {r}")));
    let witness = match &ord {
        semicomp::Orderability::Orderable(_) => Value::Null,
        semicomp::Orderability::NotOrderable { pair, triple } => {
            let l = |i: usize| s.label(&i);
            lines.push(format!(
                "orderable: no ({} <= {} <= {}; {} + {} + {} = {} but {} + {} != {})",
                l(pair.0),
                l(pair.1),
                l(pair.0),
                l(triple.0),
                l(triple.1),
                l(triple.2),
                l(triple.0),
                l(triple.0),
                l(triple.1),
                l(triple.0)
            ));
            json!({
                "pair": [l(pair.0), l(pair.1)],
                "triple": [l(triple.0), l(triple.1), l(triple.2)],
            })
        }
    };
    if ord.is_orderable() {
        lines.push("orderable: yes".into());
    }
    match zsf.witness {
        None => lines.push("zero-sum-free: yes".into()),
        Some((x, y)) => lines.push(format!(
            "zero-sum-free: no ({} + {} = {})",
            s.label(&x),
            s.label(&y),
            s.label(&s.zero_index())
        )),
    }
    json["natural_quasiorder"] = json!(matrix_rows(&q));
    json["orderable"] = json!(ord.is_orderable());
    json["orderability_witness"] = witness;
    json["zero_sum_free"] = json!(zsf.holds);
    json["zero_sum_witness"] = json!(zsf.witness.map(|(x, y)| [s.label(&x), s.label(&y)]));
    Ok(Output::ok(lines, json))
}

fn cmd_order(input: &str) -> Result<Output> {
    let (name, s, given) = finite_only(input)?;
    let ord = is_orderable(&s)?;
    let search = search_compatible_order(&s, 10_000_000);
    let mut lines = vec![format!("semiring {name}")];
    let order_pairs = |o: &PartialOrder| -> Vec<[String; 2]> {
        o.strict_pairs()
            .into_iter()
            .map(|(a, b)| [s.label(&a), s.label(&b)])
            .collect()
    };
    let mut json = json!({ "name": name });
    match &ord {
        semicomp::Orderability::Orderable(o) => {
            let pairs = order_pairs(o);
            lines.push(format!(
                "orderable: yes; natural order: {}",
                pairs
                    .iter()
                    .map(|[a, b]| format!("{a} < {b}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            json["natural_order"] = json!(pairs);
        }
        semicomp::Orderability::NotOrderable { triple, .. } => {
            let (a, x, y) = *triple;
            lines.push(format!(
                "orderable: no; {a} + {x} + {y} = {a} but {a} + {x} != {a}",
                a = s.label(&a),
                x = s.label(&x),
                y = s.label(&y)
            ));
            json["witness"] = json!([s.label(&a), s.label(&x), s.label(&y)]);
        }
    }
    json["orderable"] = json!(ord.is_orderable());
    let (search_text, search_json) = match &search {
        OrderSearch::Found(o) => (
            "found a compatible order".to_string(),
            json!({ "found": order_pairs(o) }),
        ),
        OrderSearch::NoneExists { examined } => (
            format!("no compatible order among {examined} candidates"),
            json!({ "none_exists": examined }),
        ),
        OrderSearch::Inconclusive { examined } => (
            format!("inconclusive after {examined} candidates"),
            json!({ "inconclusive": examined }),
        ),
    };
    lines.push(format!("order search: {search_text}"));
    json["search"] = search_json;
    let mut failed = !ord.is_orderable();
    if let Some(o) = &given {
        let r = check_ordered_semiring(&s, o);
        lines.extend(report_lines("supplied order", &r));
        failed |= !r.passed;
        json["supplied_order"] = report_json(&r);
    }
    Ok(Output::ok(lines, json).failing_if(failed))
}

fn cmd_complete(input: &str, c: &Config) -> Result<Output> {
    let subject = resolve(input)?;
    match subject {
        Subject::Nat => {
            let n = nat_completion(&c.cfg)?;
            let mut lines = vec!["completion of nat: nat-infinity (ℕ ∪ {∞})".to_string()];
            for (k, v) in &n.sums_of_one {
                lines.push(format!("  Σ{{1 ↦ {k}}} = {v}"));
            }
            lines.extend(report_lines("finitary report", &n.report));
            let failed = !n.report.passed;
            Ok(Output::ok(lines, serde_json::to_value(&n).expect("serializes")).failing_if(failed))
        }
        Subject::NatInfinity | Subject::OmegaMinus => {
            let (name, r) = match subject {
                Subject::NatInfinity => {
                    ("nat-infinity", completeness_report(&NatInfinity, &c.cfg)?)
                }
                _ => ("omega-minus", completeness_report(&OmegaMinus, &c.cfg)?),
            };
            let mut lines = vec![format!(
                "{name} already carries infinite sums; checking them"
            )];
            lines.extend(report_lines("finitary report", &r));
            let json = json!({ "name": name, "report": report_json(&r) });
            Ok(Output::ok(lines, json).failing_if(!r.passed))
        }
        Subject::Table {
            name,
            semiring,
            order,
            ..
        } => {
            let ord = is_orderable(&semiring)?;
            if let Some(e) = ord.refusal(&semiring) {
                return Err(e);
            }
            let o = order.or_else(|| ord.order().cloned()).expect("orderable");
            let mut res = completion_of_finite(&semiring, &o, &name, &c.cfg)?;
            res.finitary_report
                .merge(sim_congruence_battery(&semiring, &o, &c.poly)?);
            let table = res.semiring.sigma_table();
            let mut lines = vec![
                format!("completion of {name}: same carrier, Σ f = greatest finite subsum of f"),
                "element: Σ{x ↦ aleph0}, Σ{x ↦ uncountable}".into(),
            ];
            lines.extend(table.iter().map(|(x, a, u)| format!("  {x}: {a}, {u}")));
            lines.extend(report_lines("finitary report", &res.finitary_report));
            let json = json!({
                "name": name,
                "sigma": table
                    .iter()
                    .map(|(x, a, u)| json!({ "element": x, "aleph0": a, "uncountable": u }))
                    .collect::<Vec<_>>(),
                "embedding": res.embedding.iter().map(|i| semiring.label(i)).collect::<Vec<_>>(),
                "report": report_json(&res.finitary_report),
            });
            let failed = !res.finitary_report.passed;
            Ok(Output::ok(lines, json).failing_if(failed))
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn cmd_dcomplete(
    input: &str,
    sequence: Option<&Path>,
    series: Option<usize>,
    c: &Config,
) -> Result<Output> {
    let subject = resolve(input)?;
    let extra = sequence.map(read_text).transpose()?;
    with_complete(&subject, &c.cfg, &mut |t| {
        let (mut lines, mut json, mut ok) = t.d_complete(&c.cfg, extra.as_deref())?;
        if let Some(k) = series {
            let r = t.series(k, c.maxlen, &c.cfg);
            lines.extend(report_lines(
                &format!(
                    "series over a {k}-letter alphabet up to length {}",
                    c.maxlen
                ),
                &r,
            ));
            ok &= r.passed;
            json["series"] = report_json(&r);
        }
        json["input"] = json!(input);
        Ok(Output::ok(lines, json).failing_if(!ok))
    })
}

fn cmd_finitary(input: &str, family: Option<&Path>, c: &Config) -> Result<Output> {
    let subject = resolve(input)?;
    let extra = family.map(read_text).transpose()?;
    with_complete(&subject, &c.cfg, &mut |t| {
        let (lines, mut json, ok) = t.finitary(&c.cfg, extra.as_deref())?;
        json["input"] = json!(input);
        json["carrier"] = json!(t.carrier_summary());
        Ok(Output::ok(lines, json).failing_if(!ok))
    })
}

fn cmd_congruence(input: &str, p: &str, q: &str, c: &Config) -> Result<Output> {
    let (name, s, order) = finite_only(input)?;
    let ord = is_orderable(&s)?;
    if let Some(e) = ord.refusal(&s) {
        return Err(e);
    }
    let o = order.or_else(|| ord.order().cloned()).expect("orderable");
    let is_series = |t: &str| t.trim_start().starts_with("maxlen");
    if is_series(p) || is_series(q) {
        // a polynomial side is read at the other side's length bound
        let bound = [p, q]
            .iter()
            .find(|t| is_series(t))
            .map(|t| parse_series(t, &s).map(|r| r.max_len()))
            .transpose()?
            .unwrap_or(c.maxlen);
        let read = |t: &str| -> Result<TruncatedSeries> {
            if is_series(t) {
                parse_series(t, &s)
            } else {
                TruncatedSeries::from_polynomial(&parse_polynomial(t, &s)?, bound)
            }
        };
        let r = read(p)?;
        let t = read(q)?;
        let fwd = lesssim_series(&r, &t, &s, &o, c.cap)?;
        let bwd = lesssim_series(&t, &r, &s, &o, c.cap)?;
        let show = |v: &SeriesLesssim| match v {
            SeriesLesssim::Decided(b) => json!(b),
            SeriesLesssim::Inconclusive { .. } => json!("inconclusive"),
        };
        let inconclusive = matches!(fwd, SeriesLesssim::Inconclusive { .. })
            || matches!(bwd, SeriesLesssim::Inconclusive { .. });
        let sim = fwd == SeriesLesssim::Decided(true) && bwd == SeriesLesssim::Decided(true);
        let json = json!({
            "semiring": name,
            "lesssim_forward": show(&fwd),
            "lesssim_backward": show(&bwd),
            "sim": if inconclusive { json!("inconclusive") } else { json!(sim) },
            "cap": c.cap,
        });
        let lines = vec![
            format!("p ≲ q: {}", show(&fwd)),
            format!("q ≲ p: {}", show(&bwd)),
            format!("∞ coefficients capped at {} and {}", c.cap - 1, c.cap),
        ];
        return Ok(Output::ok(lines, json).failing_if(inconclusive));
    }
    let pp = parse_polynomial(p, &s)?;
    let qq = parse_polynomial(q, &s)?;
    let v = congruence(&pp, &qq, &s, &o)?;
    let witness = v.witness.as_ref().map(|w| w.display(&s).to_string());
    let mut lines = vec![
        format!("p ≲ q: {}", v.lesssim_forward),
        format!("q ≲ p: {}", v.lesssim_backward),
        format!("p ∼ q: {}", v.sim()),
    ];
    if let Some(w) = &witness {
        lines.push(format!("  no match below the other side for {w}"));
    }
    let json = json!({
        "semiring": name,
        "lesssim_forward": v.lesssim_forward,
        "lesssim_backward": v.lesssim_backward,
        "sim": v.sim(),
        "witness": witness,
    });
    Ok(Output::ok(lines, json))
}

fn cmd_gallery(name: Option<&str>) -> Result<Output> {
    let Some(name) = name else {
        let lines = gallery::GALLERY_NAMES
            .iter()
            .map(|n| n.to_string())
            .collect();
        return Ok(Output::ok(
            lines,
            json!({ "names": gallery::GALLERY_NAMES }),
        ));
    };
    match resolve(name)? {
        Subject::Table {
            semiring,
            order,
            sigma,
            ..
        } => {
            let doc = SemiringDoc::from_semiring(&semiring, order.as_ref());
            let mut lines = vec![format!(
                "{name}: {} elements: {}",
                semiring.size(),
                semiring.labels().join(" ")
            )];
            let fmt_table = |t: &[Vec<usize>]| -> Vec<String> {
                t.iter()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|i| semiring.label(i)).collect();
                        format!("  {}", cells.join(" "))
                    })
                    .collect()
            };
            lines.push("add:".into());
            lines.extend(fmt_table(&doc.add));
            lines.push("mul:".into());
            lines.extend(fmt_table(&doc.mul));
            let mut json = serde_json::to_value(&doc).expect("serializes");
            if let Some(f) = &sigma {
                let table = f.sigma_table();
                lines.push("Σ{x ↦ aleph0}, Σ{x ↦ uncountable}:".into());
                lines.extend(table.iter().map(|(x, a, u)| format!("  {x}: {a}, {u}")));
                json["sigma"] = json!(table
                    .iter()
                    .map(|(x, a, u)| json!({ "element": x, "aleph0": a, "uncountable": u }))
                    .collect::<Vec<_>>());
            }
            Ok(Output::ok(lines, json))
        }
        Subject::Nat => Ok(Output::ok(
            vec!["nat: the natural numbers with + and ·, ordered, without infinite sums".into()],
            json!({ "name": "nat", "complete": false }),
        )),
        Subject::NatInfinity => Ok(Output::ok(
            vec![
                "nat-infinity: ℕ ∪ {∞}; Σ f = ∞ when f has ∞ or infinitely many nonzero terms"
                    .into(),
            ],
            json!({ "name": "nat-infinity", "complete": true }),
        )),
        Subject::OmegaMinus => Ok(Output::ok(
            vec![
                "omega-minus: 0, 1, 2, ..., ∞-2, ∞-1, ∞ with n + (∞-k) = ∞-(k-n) for n < k".into(),
            ],
            json!({ "name": "omega-minus", "complete": true }),
        )),
    }
}

fn cmd_selftest(seed: u64, format: Format) -> Output {
    let report = acceptance::run(seed);
    let lines = report.render_text().lines().map(str::to_string).collect();
    let json = match format {
        Format::Json => serde_json::to_value(&report).expect("serializes"),
        Format::Human => Value::Null,
    };
    Output::ok(lines, json).failing_if(!report.passed())
}

fn run(cli: &Cli) -> Result<Output> {
    let (cfg, poly) = parse_battery(&cli.battery, cli.seed)?;
    let c = Config {
        cfg,
        poly,
        maxlen: cli.maxlen,
        cap: cli.cap,
    };
    match &cli.command {
        Command::Check { input } => cmd_check(input),
        Command::Order { input } => cmd_order(input),
        Command::Complete { input } => cmd_complete(input, &c),
        Command::Dcomplete {
            input,
            sequence,
            series,
        } => cmd_dcomplete(input, sequence.as_deref(), *series, &c),
        Command::Finitary { input, family } => cmd_finitary(input, family.as_deref(), &c),
        Command::Congruence { input, p, q } => cmd_congruence(input, p, q, &c),
        Command::Gallery { name } => cmd_gallery(name.as_deref()),
        Command::Selftest => Ok(cmd_selftest(cli.seed, cli.format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Human => {
                    for l in &out.lines {
                        println!("{l}");
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out.json).expect("serializes")
                    )
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Human => eprintln!("error: {e}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "error": e.to_string(), "exit": code }))
                        .expect("serializes")
                ),
            }
            ExitCode::from(code)
        }
    }
}
