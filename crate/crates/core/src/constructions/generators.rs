use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::witnesses::{
    b3_kipas_descriptor, bk_path_descriptor, small_kipas_descriptor, t_path_descriptor, witness_kipas_linear,
};
use super::{build_family, tri_internal, FamilyDescriptor, FamilyKind};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{domain, Error, Result};
use crate::patterns::{has_mono_pattern, PatternSpec};
use crate::structure::is_member;

/// How free internal edges of a partition family are colored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InternalFill {
    /// The smaller allowed color.
    Low,
    /// The larger allowed color (the part's own color for `B_k`).
    #[default]
    High,
    /// Uniformly at random from the allowed pair, seeded.
    Random,
}

#[derive(Clone, Debug, Default)]
pub struct GenParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub parts: Vec<usize>,
    pub special: Vec<usize>,
    pub fill: InternalFill,
    pub seed: u64,
    pub verify: bool,
}

impl GenParams {
    fn req(v: Option<usize>, name: &str, family: &str) -> Result<usize> {
        v.ok_or_else(|| Error::Domain(format!("generator {family} requires --{name}")))
    }
}

/// A pattern the generated coloring is meant to avoid; `color: None` means every color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub color: Option<Color>,
    pub pattern: PatternSpec,
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub coloring: EdgeColoring,
    pub descriptor: Option<FamilyDescriptor>,
    pub targets: Vec<Target>,
}

impl Generated {
    /// Checks family membership and absence of every target. Failures are internal errors.
    pub fn verify(&self) -> Result<()> {
        if let Some(d) = &self.descriptor {
            if is_member(&self.coloring, d.family).is_none() {
                return Err(Error::Internal(format!("generated coloring is not accepted as a {} member", d.family)));
            }
        }
        for t in &self.targets {
            let colors: Vec<Color> = match t.color {
                Some(c) => vec![c],
                None => (1..=self.coloring.n_colors()).collect(),
            };
            for c in colors {
                if let Some(e) = has_mono_pattern(&self.coloring, c, &t.pattern)? {
                    return Err(Error::Internal(format!(
                        "generated coloring contains {} in color {c} at {:?}",
                        t.pattern, e.vertex_map
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A named coloring constructor.
pub trait Generator: Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn build(&self, p: &GenParams) -> Result<Generated>;

    /// Builds, then verifies when `p.verify` is set.
    fn generate(&self, p: &GenParams) -> Result<Generated> {
        let g = self.build(p)?;
        if p.verify {
            g.verify()?;
        }
        Ok(g)
    }
}

fn filler(fill: InternalFill, seed: u64) -> impl FnMut([Color; 2]) -> Color {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    move |pair| match fill {
        InternalFill::Low => pair[0],
        InternalFill::High => pair[1],
        InternalFill::Random => pair[rng.gen_range(0..2)],
    }
}

fn from_descriptor(d: FamilyDescriptor, targets: Vec<Target>) -> Result<Generated> {
    Ok(Generated { coloring: build_family(&d)?, descriptor: Some(d), targets })
}

fn any(pattern: PatternSpec) -> Vec<Target> {
    vec![Target { color: None, pattern }]
}

struct G1Gen;
struct G2Gen;
struct G3Gen;
struct BkGen;
struct TGen;
struct BkPathWitness;
struct TPathWitness;
struct B3KipasWitness;
struct KipasLinearWitness;
struct Gamma(usize);

fn tri_parts(p: &GenParams, kind: FamilyKind, name: &str) -> Result<Generated> {
    if p.parts.len() != 3 {
        return domain(format!("{name} needs --parts a,b,c"));
    }
    let mut pick = filler(p.fill, p.seed);
    let d =
        FamilyDescriptor::with_parts(kind, 3, FamilyDescriptor::consecutive(&p.parts), |i, _, _| pick(tri_internal(i)));
    from_descriptor(d, Vec::new())
}

impl Generator for G1Gen {
    fn name(&self) -> &'static str {
        "g1"
    }
    fn description(&self) -> &'static str {
        "three parts (at most one empty), cross colors 1/2/3; --parts a,b,c [--fill]"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        tri_parts(p, FamilyKind::G1, "g1")
    }
}

impl Generator for TGen {
    fn name(&self) -> &'static str {
        "t"
    }
    fn description(&self) -> &'static str {
        "three nonempty parts, cross colors 1/2/3; --parts a,b,c [--fill]"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        tri_parts(p, FamilyKind::T, "t")
    }
}

fn special_or(p: &GenParams, default: &[usize]) -> Vec<usize> {
    if p.special.is_empty() {
        default.to_vec()
    } else {
        p.special.clone()
    }
}

impl Generator for G2Gen {
    fn name(&self) -> &'static str {
        "g2"
    }
    fn description(&self) -> &'static str {
        "single color-2 edge xy, stars at x and y in colors 3 and 4; --n [--special x,y]"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let mut d = FamilyDescriptor::new(FamilyKind::G2, GenParams::req(p.n, "n", "g2")?, 4);
        d.special = special_or(p, &[0, 1]);
        from_descriptor(d, Vec::new())
    }
}

impl Generator for G3Gen {
    fn name(&self) -> &'static str {
        "g3"
    }
    fn description(&self) -> &'static str {
        "rainbow triangle abc in colors 2, 3, 4, all else color 1; --n [--special a,b,c]"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let mut d = FamilyDescriptor::new(FamilyKind::G3, GenParams::req(p.n, "n", "g3")?, 4);
        d.special = special_or(p, &[0, 1, 2]);
        from_descriptor(d, Vec::new())
    }
}

impl Generator for BkGen {
    fn name(&self) -> &'static str {
        "bk"
    }
    fn description(&self) -> &'static str {
        "k-1 parts of size >= 2, cross edges color 1; --k --parts s1,...,s(k-1) [--fill]"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let k = GenParams::req(p.k, "k", "bk")?;
        if k > 32 {
            return domain("bk supports at most 32 colors");
        }
        let mut pick = filler(p.fill, p.seed);
        let d = FamilyDescriptor::with_parts(
            FamilyKind::Bk,
            k as Color,
            FamilyDescriptor::consecutive(&p.parts),
            |i, _, _| pick([1, i as Color + 2]),
        );
        from_descriptor(d, Vec::new())
    }
}

impl Generator for BkPathWitness {
    fn name(&self) -> &'static str {
        "bk-path-witness"
    }
    fn description(&self) -> &'static str {
        "B_k member without a monochromatic P_n on ceil((3n-3)/2)-1 vertices; --k --n"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let (k, n) = (GenParams::req(p.k, "k", self.name())?, GenParams::req(p.n, "n", self.name())?);
        from_descriptor(bk_path_descriptor(k, n)?, any(PatternSpec::Path(n)))
    }
}

impl Generator for TPathWitness {
    fn name(&self) -> &'static str {
        "t-path-witness"
    }
    fn description(&self) -> &'static str {
        "T member without a monochromatic P_n; --n"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let n = GenParams::req(p.n, "n", self.name())?;
        from_descriptor(t_path_descriptor(n)?, any(PatternSpec::Path(n)))
    }
}

impl Generator for B3KipasWitness {
    fn name(&self) -> &'static str {
        "b3-kipas-witness"
    }
    fn description(&self) -> &'static str {
        "B_3 member without a monochromatic kipas on n+1 vertices; --n (n >= 5)"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let n = GenParams::req(p.n, "n", self.name())?;
        from_descriptor(b3_kipas_descriptor(n)?, any(PatternSpec::Kipas(n)))
    }
}

impl Generator for KipasLinearWitness {
    fn name(&self) -> &'static str {
        "kipas-linear-witness"
    }
    fn description(&self) -> &'static str {
        "red K_n plus a blue-joined remainder: no red kipas_n, no blue linear forest with m edges; --n --m"
    }
    fn build(&self, p: &GenParams) -> Result<Generated> {
        let (n, m) = (GenParams::req(p.n, "n", self.name())?, GenParams::req(p.m, "m", self.name())?);
        let coloring = witness_kipas_linear(n, m)?;
        let targets = vec![
            Target { color: Some(1), pattern: PatternSpec::Kipas(n) },
            Target { color: Some(2), pattern: PatternSpec::LinearForestMinEdges { min_edges: m, min_order: 2 } },
        ];
        Ok(Generated { coloring, descriptor: None, targets })
    }
    fn generate(&self, p: &GenParams) -> Result<Generated> {
        let g = self.build(p)?;
        if p.verify {
            let n = p.n.unwrap_or(0);
            if g.coloring.edges().any(|(u, v, c)| (c == 1) != (v < n && u < n)) {
                return Err(Error::Internal("red edges do not form the clique on the first n vertices".into()));
            }
            g.verify()?;
        }
        Ok(g)
    }
}

impl Generator for Gamma {
    fn name(&self) -> &'static str {
        if self.0 == 2 {
            "gamma1"
        } else {
            "gamma2"
        }
    }
    fn description(&self) -> &'static str {
        if self.0 == 2 {
            "K_4: color 1 = K_{2,2}, colors 2 and 3 one edge each; no monochromatic kipas_2"
        } else {
            "K_6: color 1 = K_{3,3}, colors 2 and 3 one triangle each; no monochromatic kipas_3"
        }
    }
    fn build(&self, _: &GenParams) -> Result<Generated> {
        from_descriptor(small_kipas_descriptor(self.0)?, any(PatternSpec::Kipas(self.0)))
    }
}

static GENERATORS: &[&dyn Generator] = &[
    &G1Gen,
    &G2Gen,
    &G3Gen,
    &BkGen,
    &TGen,
    &BkPathWitness,
    &TPathWitness,
    &B3KipasWitness,
    &KipasLinearWitness,
    &Gamma(2),
    &Gamma(3),
];

pub fn generators() -> &'static [&'static dyn Generator] {
    GENERATORS
}

pub fn generator_by_name(name: &str) -> Result<&'static dyn Generator> {
    GENERATORS.iter().copied().find(|g| g.name() == name).ok_or_else(|| {
        let known: Vec<_> = GENERATORS.iter().map(|g| g.name()).collect();
        Error::Syntax(format!("unknown family {name:?}; known: {}", known.join(", ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_witness_verifies() {
        let cases: Vec<(&str, GenParams)> = vec![
            ("bk-path-witness", GenParams { k: Some(3), n: Some(6), ..Default::default() }),
            ("t-path-witness", GenParams { n: Some(5), ..Default::default() }),
            ("b3-kipas-witness", GenParams { n: Some(5), ..Default::default() }),
            ("kipas-linear-witness", GenParams { n: Some(6), m: Some(3), ..Default::default() }),
            ("gamma1", GenParams::default()),
            ("gamma2", GenParams::default()),
        ];
        for (name, mut p) in cases {
            p.verify = true;
            generator_by_name(name).unwrap().generate(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn partition_generators() {
        let p = GenParams { k: Some(3), parts: vec![2, 3], ..Default::default() };
        let g = generator_by_name("bk").unwrap().generate(&p).unwrap();
        assert!(g.coloring.is_exact());
        let p = GenParams { parts: vec![2, 2, 0], fill: InternalFill::Random, seed: 7, ..Default::default() };
        assert!(generator_by_name("g1").unwrap().generate(&p).is_ok());
        assert!(generator_by_name("t").unwrap().generate(&p).is_err());
        assert_eq!(generators().len(), 11);
        assert!(generator_by_name("g4").is_err());
    }
}
