use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::analyze::{analyze_problem, AnalyzeConfig, Problem};
use crate::model::{Axiom, ConceptExpr, ConceptName, Query, QueryAtom, Role, RoleName, Term, Variable};

const FRESH_VARIABLE: f64 = 0.5;
const FRESH_NAME: f64 = 0.8;
const ROLE_ATOM: f64 = 0.3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeClass {
    Small,
    Medium,
    Large,
}

impl SizeClass {
    /// Inclusive range for template atoms, pattern atoms and input shapes.
    pub fn range(self) -> (usize, usize) {
        match self {
            SizeClass::Small => (1, 2),
            SizeClass::Medium => (5, 7),
            SizeClass::Large => (11, 13),
        }
    }
}

impl FromStr for SizeClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "SMALL" => Ok(SizeClass::Small),
            "MEDIUM" => Ok(SizeClass::Medium),
            "LARGE" => Ok(SizeClass::Large),
            _ => Err(format!("unknown size class `{}`", s)),
        }
    }
}

impl fmt::Display for SizeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SizeClass::Small => "SMALL",
            SizeClass::Medium => "MEDIUM",
            SizeClass::Large => "LARGE",
        })
    }
}

#[derive(Default)]
struct Names {
    concepts: Vec<ConceptName>,
    roles: Vec<RoleName>,
}

impl Names {
    fn concept(&mut self, rng: &mut impl Rng) -> ConceptName {
        if self.concepts.is_empty() || rng.gen_bool(FRESH_NAME) {
            let c = ConceptName::new(&format!("C{}", self.concepts.len()));
            self.concepts.push(c.clone());
            c
        } else {
            self.concepts[rng.gen_range(0..self.concepts.len())].clone()
        }
    }

    fn role(&mut self, rng: &mut impl Rng) -> RoleName {
        if self.roles.is_empty() || rng.gen_bool(FRESH_NAME) {
            let r = RoleName::new(&format!("r{}", self.roles.len()));
            self.roles.push(r.clone());
            r
        } else {
            self.roles[rng.gen_range(0..self.roles.len())].clone()
        }
    }
}

fn random_atom(rng: &mut impl Rng, names: &mut Names, term: &mut impl FnMut(&mut dyn rand::RngCore) -> Term) -> QueryAtom {
    if rng.gen_bool(ROLE_ATOM) {
        let s = term(rng);
        let o = term(rng);
        QueryAtom::Role(s, o, names.role(rng))
    } else {
        let t = term(rng);
        QueryAtom::Concept(t, names.concept(rng))
    }
}

/// Draws a query and input shapes over the query's pattern vocabulary.
pub fn random_problem(class: SizeClass, rng: &mut impl Rng) -> Problem {
    let (lo, hi) = class.range();
    let mut names = Names::default();
    let mut vars: Vec<Variable> = Vec::new();

    let mut pattern = std::collections::BTreeSet::new();
    for _ in 0..rng.gen_range(lo..=hi) {
        let atom = random_atom(rng, &mut names, &mut |r| {
            if vars.is_empty() || r.gen_bool(FRESH_VARIABLE) {
                let v = Variable::new(&format!("x{}", vars.len()));
                vars.push(v.clone());
                Term::Var(v)
            } else {
                Term::Var(vars[r.gen_range(0..vars.len())].clone())
            }
        });
        pattern.insert(atom);
    }
    let input = Names {
        concepts: names.concepts.clone(),
        roles: names.roles.clone(),
    };

    let mut template = std::collections::BTreeSet::new();
    for _ in 0..rng.gen_range(lo..=hi) {
        let atom = random_atom(rng, &mut names, &mut |r| Term::Var(vars[r.gen_range(0..vars.len())].clone()));
        template.insert(atom);
    }
    let query = Query::new(template, pattern).expect("template variables are drawn from the pattern");

    let shapes = (0..rng.gen_range(lo..=hi)).map(|_| random_shape(rng, &input)).collect();
    Problem { query, shapes }
}

fn random_role(rng: &mut impl Rng, roles: &[RoleName]) -> Role {
    let name = roles[rng.gen_range(0..roles.len())].clone();
    if rng.gen_bool(0.5) {
        Role::inv(name)
    } else {
        Role::new(name)
    }
}

fn random_shape(rng: &mut impl Rng, voc: &Names) -> Axiom {
    let concept = |rng: &mut dyn rand::RngCore| -> ConceptExpr {
        if voc.concepts.is_empty() {
            ConceptExpr::Top
        } else {
            ConceptExpr::Atom(voc.concepts[rng.gen_range(0..voc.concepts.len())].clone())
        }
    };
    let has_roles = !voc.roles.is_empty();
    let target = if has_roles && (voc.concepts.is_empty() || rng.gen_bool(0.5)) {
        ConceptExpr::exists(random_role(rng, &voc.roles), ConceptExpr::Top)
    } else {
        concept(rng)
    };
    let constraint = match if has_roles { rng.gen_range(0..3) } else { 0 } {
        0 if !voc.concepts.is_empty() => concept(rng),
        1 | 0 => ConceptExpr::exists(random_role(rng, &voc.roles), concept(rng)),
        _ => ConceptExpr::forall(random_role(rng, &voc.roles), concept(rng)),
    };
    Axiom::sub(target, constraint)
}

#[derive(Clone, Debug)]
pub struct ProfileConfig {
    pub class: SizeClass,
    pub samples: usize,
    pub seed: u64,
    pub analyze: AnalyzeConfig,
}

#[derive(Clone, Debug)]
pub struct ProfileSample {
    pub elapsed: Duration,
    pub timed_out: bool,
    pub candidates: usize,
    pub shapes: usize,
}

#[derive(Clone, Debug)]
pub struct ProfileReport {
    pub class: SizeClass,
    pub samples: Vec<ProfileSample>,
}

impl ProfileReport {
    fn finished(&self) -> Vec<Duration> {
        let mut d: Vec<Duration> = self.samples.iter().filter(|s| !s.timed_out).map(|s| s.elapsed).collect();
        d.sort();
        d
    }

    pub fn timeouts(&self) -> usize {
        self.samples.iter().filter(|s| s.timed_out).count()
    }

    /// Average over samples that finished in time.
    pub fn average(&self) -> Option<Duration> {
        let d = self.finished();
        (!d.is_empty()).then(|| d.iter().sum::<Duration>() / d.len() as u32)
    }

    pub fn median(&self) -> Option<Duration> {
        let d = self.finished();
        (!d.is_empty()).then(|| d[d.len() / 2])
    }
}

impl fmt::Display for ProfileReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms = |d: Option<Duration>| d.map_or("-".to_string(), |d| format!("{:.1}", d.as_secs_f64() * 1e3));
        write!(
            f,
            "class {}: samples {}, average {} ms, median {} ms, timeouts {}",
            self.class,
            self.samples.len(),
            ms(self.average()),
            ms(self.median()),
            self.timeouts()
        )
    }
}

pub fn profile(cfg: &ProfileConfig) -> ProfileReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples = (0..cfg.samples)
        .map(|_| {
            let problem = random_problem(cfg.class, &mut rng);
            let start = Instant::now();
            let result = analyze_problem(&problem, &cfg.analyze);
            let elapsed = start.elapsed();
            match result {
                Ok(a) => ProfileSample {
                    elapsed,
                    timed_out: a.timed_out(),
                    candidates: a.candidates,
                    shapes: a.shapes.len(),
                },
                Err(_) => ProfileSample {
                    elapsed,
                    timed_out: true,
                    candidates: 0,
                    shapes: 0,
                },
            }
        })
        .collect();
    ProfileReport {
        class: cfg.class,
        samples,
    }
}
