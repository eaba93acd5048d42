//! Executing a command against a prepared arrangement.

use std::time::{Duration, Instant};

use plgen::arrangements::{
    blocker_ideal, canonical_embedding, enlarge_embedding, h_product_ideal, minimal_covers, pl_check_embedding,
    vanishing_ideal, ArrangementError, Embedding, PlOptions,
};
use plgen::families::orbit_shapes;
use plgen::lattice::{Antichain, HyperplaneArrangement, LatticeError};
use plgen::poly::{hilbert_function, ideal_compare, limit, Ideal, MonomialOrder, PolyError, Polynomial};
use serde_json::{json, Value};

use crate::document::{ArrangementDocument, FamilySpec};
use crate::families::instantiate;
use crate::report::{Printer, Report};
use crate::InputError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Intersection lattice of the host and the antichain of the arrangement.
    Lattice,
    /// The blocker and double blocker of the antichain.
    Blocker,
    /// The blocker ideal B and how it compares with the vanishing ideal.
    Bideal,
    /// The product ideal F after enlarging the host.
    Fideal,
    /// The vanishing ideal I_A and its Hilbert function.
    Ideal,
    /// The full pl-generation certificate.
    Plcheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Lattice => "lattice",
            Command::Blocker => "blocker",
            Command::Bideal => "bideal",
            Command::Fideal => "fideal",
            Command::Ideal => "ideal",
            Command::Plcheck => "plcheck",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub order: MonomialOrder,
    /// Largest degree for Hilbert function rows. Defaults to the largest
    /// generator degree of the vanishing ideal.
    pub max_degree: Option<u32>,
    pub time_limit: Option<Duration>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            order: MonomialOrder::GrevLex,
            max_degree: None,
            time_limit: Some(Duration::from_secs(300)),
        }
    }
}

/// An embedded arrangement ready for any command, with the echo of its input.
#[derive(Clone, Debug)]
pub struct Subject {
    pub embedding: Embedding,
    pub braid_n: Option<usize>,
    pub predicted: Vec<(&'static str, Ideal)>,
    pub family: Option<FamilySpec>,
    pub host_given: bool,
}

pub fn prepare(doc: &ArrangementDocument) -> Result<Subject, InputError> {
    match doc {
        ArrangementDocument::Explicit(e) => {
            let (embedding, host_given) = match &e.host {
                None => (canonical_embedding(&e.arrangement), false),
                Some(forms) => {
                    let host = HyperplaneArrangement::new(e.arrangement.dim(), forms.iter().cloned())
                        .map_err(|err| InputError::Family(format!("host: {err}")))?;
                    let embedding = Embedding::new(e.arrangement.clone(), host).map_err(|err| match err {
                        ArrangementError::NotEmbedded(i) => InputError::Family(format!(
                            "subspace {} is not an intersection of host hyperplanes",
                            i + 1
                        )),
                        other => InputError::Family(other.to_string()),
                    })?;
                    (embedding, true)
                }
            };
            Ok(Subject {
                embedding,
                braid_n: None,
                predicted: Vec::new(),
                family: None,
                host_given,
            })
        }
        ArrangementDocument::Family(spec) => {
            let inst = instantiate(spec)?;
            Ok(Subject {
                embedding: inst.embedding,
                braid_n: inst.braid_n,
                predicted: inst.predicted,
                family: Some(spec.clone()),
                host_given: true,
            })
        }
    }
}

impl Subject {
    pub fn printer(&self, order: MonomialOrder) -> Printer {
        Printer {
            ring: self.embedding.arrangement().ring().clone(),
            order,
        }
    }

    pub fn echo(&self, p: &Printer) -> Value {
        let a = self.embedding.arrangement();
        json!({
            "dimension": a.dim(),
            "variables": a.ring().names(),
            "subspaces": a.subspaces().iter().map(|s| p.forms(s)).collect::<Vec<_>>(),
            "host": p.forms(self.embedding.host().forms()),
            "host_given": self.host_given,
            "family": self.family,
            "order": p.order.name(),
        })
    }
}

/// How a run ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Complete,
    TimedOut,
    Failed(String),
}

enum Stop {
    TimeLimit,
    Failed(String),
}

impl From<PolyError> for Stop {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::TimeLimit => Stop::TimeLimit,
            other => Stop::Failed(other.to_string()),
        }
    }
}

impl From<ArrangementError> for Stop {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::Poly(p) => p.into(),
            other => Stop::Failed(other.to_string()),
        }
    }
}

impl From<LatticeError> for Stop {
    fn from(e: LatticeError) -> Self {
        Stop::Failed(e.to_string())
    }
}

/// Runs `command` (or only the instantiation summary when `None`) and
/// returns the report with how it ended. The report is flagged incomplete
/// unless the outcome is [`Outcome::Complete`].
pub fn run(command: Option<Command>, subject: &Subject, options: &Options) -> (Report, Outcome) {
    let printer = subject.printer(options.order);
    let name = command.map_or("family", Command::name);
    let mut report = Report::new(name, subject.echo(&printer));
    let start = Instant::now();
    let mut ctx = Context {
        subject,
        options,
        printer,
        report: &mut report,
    };
    let result = limit::with_time_limit(options.time_limit, || ctx.execute(command));
    report.timings.insert("total".into(), json!(start.elapsed().as_millis() as u64));
    let outcome = match result {
        Ok(()) => Outcome::Complete,
        Err(Stop::TimeLimit) => {
            let secs = options.time_limit.map_or(0, |d| d.as_secs());
            report.error = Some(format!("time limit of {secs} s exceeded"));
            Outcome::TimedOut
        }
        Err(Stop::Failed(message)) => {
            report.error = Some(message.clone());
            Outcome::Failed(message)
        }
    };
    report.complete = outcome == Outcome::Complete;
    (report, outcome)
}

struct Context<'a> {
    subject: &'a Subject,
    options: &'a Options,
    printer: Printer,
    report: &'a mut Report,
}

impl Context<'_> {
    /// Stores a finished section and how long it took.
    fn section(&mut self, key: &str, start: Instant, value: Value) {
        self.report.insert(key, value);
        self.report
            .timings
            .insert(key.to_string(), json!(start.elapsed().as_millis() as u64));
    }

    fn execute(&mut self, command: Option<Command>) -> Result<(), Stop> {
        let e = &self.subject.embedding;
        match command {
            None => {
                let a = e.arrangement();
                let summary = json!({
                    "subspaces": a.len(),
                    "dimension": a.dim(),
                    "host_hyperplanes": e.host().len(),
                    "codimensions": a.subspaces().iter().map(Vec::len).collect::<Vec<_>>(),
                });
                self.section("summary", Instant::now(), summary);
                Ok(())
            }
            Some(Command::Lattice) => self.lattice(),
            Some(Command::Blocker) => self.blocker(),
            Some(Command::Bideal) => self.bideal(),
            Some(Command::Fideal) => self.fideal(),
            Some(Command::Ideal) => self.ideal(),
            Some(Command::Plcheck) => self.plcheck(),
        }
    }

    fn lattice(&mut self) -> Result<(), Stop> {
        let t = Instant::now();
        let e = &self.subject.embedding;
        let l = e.lattice();
        let mut rank_sizes = vec![0usize; l.rank() + 1];
        for f in l.flats() {
            rank_sizes[f.rank()] += 1;
        }
        let stats = json!({
            "flats": l.len(),
            "rank": l.rank(),
            "rank_sizes": rank_sizes,
            "atoms": l.atoms().len(),
        });
        self.section("lattice", t, stats);
        let a = e.antichain();
        let value = self.printer.antichain(l, &a);
        self.section("antichain", t, value);
        Ok(())
    }

    fn shapes(&self, a: &Antichain) -> Option<Value> {
        let n = self.subject.braid_n?;
        orbit_shapes(a, self.subject.embedding.lattice(), n).map(|s| json!(s))
    }

    fn blocker(&mut self) -> Result<(), Stop> {
        let t = Instant::now();
        let e = &self.subject.embedding;
        let l = e.lattice();
        let a = e.antichain();
        let star = l.blocker(&a);
        let double = l.blocker(&star);
        let mut section = json!({
            "antichain": self.printer.antichain(l, &a),
            "blocker": self.printer.antichain(l, &star),
            "double_blocker": self.printer.antichain(l, &double),
            "double_equals_original": double == a,
            "double_below_original": l.antichain_leq(&double, &a),
        });
        if self.subject.braid_n.is_some() {
            let m = section.as_object_mut().expect("object literal");
            m.insert("antichain_shapes".into(), self.shapes(&a).unwrap_or(Value::Null));
            m.insert("blocker_shapes".into(), self.shapes(&star).unwrap_or(Value::Null));
            m.insert("double_blocker_shapes".into(), self.shapes(&double).unwrap_or(Value::Null));
        }
        self.section("blocker", t, section);
        Ok(())
    }

    fn bideal(&mut self) -> Result<(), Stop> {
        let t = Instant::now();
        let b = blocker_ideal(&self.subject.embedding)?;
        let value = self.printer.ideal(&b)?;
        self.section("blocker_ideal", t, value);

        let t = Instant::now();
        let i = vanishing_ideal(self.subject.embedding.arrangement())?;
        let value = self.printer.ideal(&i)?;
        self.section("vanishing_ideal", t, value);

        let t = Instant::now();
        let c = ideal_compare(&b, &i)?;
        self.section("blocker_vs_vanishing", t, json!(c.as_str()));
        Ok(())
    }

    fn fideal(&mut self) -> Result<(), Stop> {
        let t = Instant::now();
        let e = &self.subject.embedding;
        let big = enlarge_embedding(e)?;
        let added = &big.host().forms()[e.host().len()..];
        let value = self.printer.forms(added);
        self.section("added_hyperplanes", t, value);
        let covers = minimal_covers(&big).len();
        self.section("covers", t, json!(covers));

        let t = Instant::now();
        let f = h_product_ideal(&big)?;
        let value = self.printer.ideal(&f)?;
        self.section("product_ideal", t, value);
        Ok(())
    }

    fn hilbert_top(&self, i: &Ideal) -> u32 {
        self.options.max_degree.unwrap_or_else(|| {
            i.generators()
                .iter()
                .filter_map(Polynomial::total_degree)
                .max()
                .unwrap_or(0)
        })
    }

    fn predicted(&mut self, vanishing: &Ideal) -> Result<(), Stop> {
        for (name, ideal) in &self.subject.predicted {
            let t = Instant::now();
            let c = ideal_compare(ideal, vanishing)?;
            let value = json!({
                "ideal": self.printer.ideal(ideal)?,
                "vs_vanishing": c.as_str(),
            });
            self.section(name, t, value);
        }
        Ok(())
    }

    fn ideal(&mut self) -> Result<(), Stop> {
        let t = Instant::now();
        let i = vanishing_ideal(self.subject.embedding.arrangement())?;
        let value = self.printer.ideal(&i)?;
        self.section("vanishing_ideal", t, value);

        let t = Instant::now();
        let values = (0..=self.hilbert_top(&i))
            .map(|d| hilbert_function(&i, d))
            .collect::<Result<Vec<_>, _>>()?;
        self.section("hilbert_function", t, json!(values));
        self.predicted(&i)
    }

    fn plcheck(&mut self) -> Result<(), Stop> {
        self.lattice()?;
        let t = Instant::now();
        let opts = PlOptions {
            max_degree: self.options.max_degree,
        };
        let cert = pl_check_embedding(&self.subject.embedding, opts)?;
        let p = &self.printer;
        let value = json!({
            "verdict": cert.verdict,
            "comparison": cert.comparison.as_str(),
            "added_hyperplanes": p.forms(&cert.added_hyperplanes),
            "covers": cert.covers,
            "product_ideal": p.ideal(&cert.product_ideal)?,
            "vanishing_ideal": p.ideal(&cert.vanishing_ideal)?,
            "witness": cert.witness.as_ref().map(|w| p.poly(&w.sign_normalized(p.order))),
            "hilbert_trace": cert.hilbert_trace.iter().map(|r| json!({
                "degree": r.degree,
                "vanishing": r.vanishing,
                "product": r.product,
            })).collect::<Vec<_>>(),
        });
        self.section("plcheck", t, value);
        self.predicted(&cert.vanishing_ideal)
    }
}
