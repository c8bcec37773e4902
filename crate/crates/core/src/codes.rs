//! Code constructions: folded Reed–Solomon, univariate multiplicity, random
//! linear, and random Reed–Solomon codes over prime fields.
//!
//! Every family is described by a [`CodeSpec`]; encoding coordinate `i`
//! applies an explicit `s × k` evaluation matrix to the message, and the
//! coordinate kernel `H_i` (messages whose `i`-th symbol vanishes) is the
//! kernel of that matrix. Multiplicity symbols use Hasse derivatives.
//! Sampled families (random linear, random Reed–Solomon) draw from a named,
//! versioned generator recorded in the spec so they serialize reproducibly.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{binomial_mod, is_prime, DensePoly, PrimeField};
use crate::linalg::{MatrixFp, Subspace};
use crate::rational::Rational;

/// A codeword: `n` symbols, each an `s`-vector over `F_p`.
pub type Codeword = Vec<Vec<u64>>;

/// Identifier of the seeded sampler: ChaCha20 keyed via `seed_from_u64`,
/// residues drawn by rejection sampling on 64-bit outputs. Recorded in
/// sampled specs so the draw is reproducible across builds.
pub const SAMPLER_RNG_NAME: &str = "chacha20-u64rej/v1";

/// Largest modulus for which random distinct evaluation points are sampled
/// by materializing `0..p`.
const MAX_SAMPLED_FIELD: u64 = 1 << 20;

/// Code family tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CodeFamily {
    /// Folded Reed–Solomon.
    Frs,
    /// Univariate multiplicity.
    Mult,
    /// Random (or explicitly given) linear code.
    Rlc,
    /// Reed–Solomon on random distinct evaluation points.
    Rrs,
}

impl CodeFamily {
    fn as_str(&self) -> &'static str {
        match self {
            CodeFamily::Frs => "frs",
            CodeFamily::Mult => "mult",
            CodeFamily::Rlc => "rlc",
            CodeFamily::Rrs => "rrs",
        }
    }

    fn parse(s: &str) -> Option<CodeFamily> {
        match s {
            "frs" => Some(CodeFamily::Frs),
            "mult" => Some(CodeFamily::Mult),
            "rlc" => Some(CodeFamily::Rlc),
            "rrs" => Some(CodeFamily::Rrs),
            _ => None,
        }
    }
}

/// Full description of a code: family, field, folding parameter `s`, block
/// length `n`, message dimension `k`, and the family-specific data.
///
/// Constructors validate the arithmetic constraints of each family. Orbit-
/// point distinctness for folded Reed–Solomon is deliberately *not* a
/// construction error — encoders remain well-defined with colliding points —
/// but it is required by the design-theoretic statements and can be queried
/// via [`CodeSpec::has_distinct_points`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeSpec {
    family: CodeFamily,
    p: u64,
    s: usize,
    n: usize,
    k: usize,
    gamma: Option<u64>,
    alphas: Option<Vec<u64>>,
    generator: Option<MatrixFp>,
    seed: Option<u64>,
    rng: Option<String>,
}

impl CodeSpec {
    /// Folded Reed–Solomon code. `alphas = None` selects the default points
    /// `γ^((i−1)s)`. Requires `1 ≤ k ≤ s·n < p` and a nonzero `gamma`.
    pub fn frs(p: u64, s: usize, n: usize, k: usize, gamma: u64, alphas: Option<Vec<u64>>) -> Result<CodeSpec> {
        validate_common(p, s, n, k)?;
        if (s * n) as u64 >= p {
            return Err(Error::InvalidCode(format!("folded RS needs s·n < p, got s·n = {} over F_{p}", s * n)));
        }
        let gamma = gamma % p;
        if gamma == 0 {
            return Err(Error::InvalidCode("gamma must be nonzero".into()));
        }
        let alphas = match alphas {
            Some(a) => validated_points(p, n, a)?,
            None => default_frs_points(p, gamma, s, n)?,
        };
        Ok(CodeSpec {
            family: CodeFamily::Frs,
            p,
            s,
            n,
            k,
            gamma: Some(gamma),
            alphas: Some(alphas),
            generator: None,
            seed: None,
            rng: None,
        })
    }

    /// Univariate multiplicity code; symbol `i` lists the first `s` Hasse
    /// derivatives at `α_i`. Requires `p ≥ s·n` and pairwise-distinct points.
    /// `alphas = None` selects `0, 1, …, n−1`.
    pub fn mult(p: u64, s: usize, n: usize, k: usize, alphas: Option<Vec<u64>>) -> Result<CodeSpec> {
        validate_common(p, s, n, k)?;
        if p < (s * n) as u64 {
            return Err(Error::InvalidCode(format!("multiplicity code needs p ≥ s·n, got p = {p}, s·n = {}", s * n)));
        }
        let alphas = match alphas {
            Some(a) => validated_points(p, n, a)?,
            None => (0..n as u64).collect(),
        };
        if !distinct(&alphas) {
            return Err(Error::InvalidCode("multiplicity code points must be pairwise distinct".into()));
        }
        Ok(CodeSpec {
            family: CodeFamily::Mult,
            p,
            s,
            n,
            k,
            gamma: None,
            alphas: Some(alphas),
            generator: None,
            seed: None,
            rng: None,
        })
    }

    /// Linear code with an explicit `k × (s·n)` generator matrix.
    pub fn rlc_from_matrix(p: u64, s: usize, n: usize, k: usize, generator: MatrixFp) -> Result<CodeSpec> {
        validate_common(p, s, n, k)?;
        if generator.modulus() != p || generator.rows() != k || generator.cols() != s * n {
            return Err(Error::InvalidCode(format!(
                "generator must be a {k}×{} matrix over F_{p}",
                s * n
            )));
        }
        Ok(CodeSpec {
            family: CodeFamily::Rlc,
            p,
            s,
            n,
            k,
            gamma: None,
            alphas: None,
            generator: Some(generator),
            seed: None,
            rng: None,
        })
    }

    /// Reed–Solomon code on explicit distinct evaluation points (`s = 1`).
    pub fn rrs_from_points(p: u64, n: usize, k: usize, alphas: Vec<u64>) -> Result<CodeSpec> {
        validate_common(p, 1, n, k)?;
        let alphas = validated_points(p, n, alphas)?;
        if !distinct(&alphas) {
            return Err(Error::InvalidCode("Reed–Solomon points must be pairwise distinct".into()));
        }
        Ok(CodeSpec {
            family: CodeFamily::Rrs,
            p,
            s: 1,
            n,
            k,
            gamma: None,
            alphas: Some(alphas),
            generator: None,
            seed: None,
            rng: None,
        })
    }

    /// Family tag.
    pub fn family(&self) -> CodeFamily {
        self.family
    }

    /// Field modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Folding / multiplicity parameter (symbol width).
    pub fn s(&self) -> usize {
        self.s
    }

    /// Block length (number of symbols).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Message dimension.
    pub fn k(&self) -> usize {
        self.k
    }

    /// FRS folding generator.
    pub fn gamma(&self) -> Option<u64> {
        self.gamma
    }

    /// Evaluation points (all families except explicit linear codes).
    pub fn alphas(&self) -> Option<&[u64]> {
        self.alphas.as_deref()
    }

    /// Generator matrix (linear-code family).
    pub fn generator(&self) -> Option<&MatrixFp> {
        self.generator.as_ref()
    }

    /// Seed recorded by [`sample_code`].
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Rate `k/(s·n)` as an exact rational.
    pub fn rate(&self) -> Rational {
        Rational::new(self.k as i64, (self.s * self.n) as i64)
    }

    /// Number of messages `p^k`, when it fits in `u64`.
    pub fn message_count(&self) -> Option<u64> {
        self.p.checked_pow(u32::try_from(self.k).ok()?)
    }

    /// True when the evaluation structure uses pairwise-distinct points: the
    /// `s·n` orbit points for folded RS, the `n` points otherwise. Explicit
    /// linear codes vacuously qualify.
    pub fn has_distinct_points(&self) -> bool {
        match self.family {
            CodeFamily::Frs => {
                let gamma = self.gamma.unwrap();
                let mut points = Vec::with_capacity(self.s * self.n);
                for &alpha in self.alphas.as_ref().unwrap() {
                    let mut x = alpha;
                    for _ in 0..self.s {
                        points.push(x);
                        x = mul_mod(x, gamma, self.p);
                    }
                }
                distinct(&points)
            }
            CodeFamily::Mult | CodeFamily::Rrs => distinct(self.alphas.as_ref().unwrap()),
            CodeFamily::Rlc => true,
        }
    }

    /// The `s × k` matrix sending a message to symbol `i` (0-indexed).
    pub fn evaluation_matrix(&self, i: usize) -> MatrixFp {
        assert!(i < self.n, "coordinate {i} out of range (n = {})", self.n);
        let mut m = MatrixFp::zero(self.p, self.s, self.k);
        match self.family {
            CodeFamily::Frs | CodeFamily::Rrs => {
                let alpha = self.alphas.as_ref().unwrap()[i];
                let gamma = self.gamma.unwrap_or(1);
                let mut point = alpha;
                for j in 0..self.s {
                    let mut pw = 1u64;
                    for c in 0..self.k {
                        m.set(j, c, pw);
                        pw = mul_mod(pw, point, self.p);
                    }
                    point = mul_mod(point, gamma, self.p);
                }
            }
            CodeFamily::Mult => {
                let alpha = self.alphas.as_ref().unwrap()[i];
                for j in 0..self.s {
                    // Row j: coefficient of c_deg in H^(j)f(α) is C(deg, j)·α^(deg−j).
                    let mut pw = 1u64;
                    for deg in j..self.k {
                        let coeff = mul_mod(binomial_mod(self.p, deg as u64, j as u64), pw, self.p);
                        m.set(j, deg, coeff);
                        pw = mul_mod(pw, alpha, self.p);
                    }
                }
            }
            CodeFamily::Rlc => {
                let g = self.generator.as_ref().unwrap();
                for j in 0..self.s {
                    for c in 0..self.k {
                        m.set(j, c, g.entry(c, self.s * i + j));
                    }
                }
            }
        }
        m
    }

    /// Encodes a length-`k` message vector.
    pub fn encode(&self, message: &[u64]) -> Result<Codeword> {
        if message.len() != self.k {
            return Err(Error::invalid(format!(
                "message has {} entries, expected k = {}",
                message.len(),
                self.k
            )));
        }
        Ok((0..self.n).map(|i| self.evaluation_matrix(i).mul_vec(message)).collect())
    }

    /// Kernel `H_i` of coordinate `i`: messages whose `i`-th symbol is zero.
    pub fn coordinate_kernel(&self, i: usize) -> Subspace {
        self.evaluation_matrix(i).kernel()
    }

    /// All coordinate kernels `H_1, …, H_n`.
    pub fn kernels(&self) -> Vec<Subspace> {
        (0..self.n).map(|i| self.coordinate_kernel(i)).collect()
    }

    /// Serializes to the canonical JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("spec serialization cannot fail")
    }

    /// Serializes to a JSON value (for embedding in reports).
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("spec serialization cannot fail")
    }

    /// Parses and validates a JSON document produced by [`CodeSpec::to_json`]
    /// or written by hand; omitted `alphas` select the family defaults, and a
    /// linear-code spec carrying only a seed is resampled deterministically.
    pub fn from_json(text: &str) -> Result<CodeSpec> {
        let wire: CodeSpecWire =
            serde_json::from_str(text).map_err(|e| Error::Deserialize(e.to_string()))?;
        CodeSpec::from_wire(wire)
    }

    fn to_wire(&self) -> CodeSpecWire {
        CodeSpecWire {
            family: self.family.as_str().to_string(),
            p: self.p,
            s: self.s,
            n: self.n,
            k: self.k,
            gamma: self.gamma,
            alphas: self.alphas.clone(),
            generator_matrix: self.generator.as_ref().map(|g| g.entries().to_vec()),
            seed: self.seed,
            rng: self.rng.clone(),
        }
    }

    fn from_wire(wire: CodeSpecWire) -> Result<CodeSpec> {
        let family = CodeFamily::parse(&wire.family)
            .ok_or_else(|| Error::Deserialize(format!("unknown code family {:?}", wire.family)))?;
        let mut spec = match family {
            CodeFamily::Frs => {
                let gamma = wire
                    .gamma
                    .ok_or_else(|| Error::Deserialize("folded RS spec requires gamma".into()))?;
                CodeSpec::frs(wire.p, wire.s, wire.n, wire.k, gamma, wire.alphas)?
            }
            CodeFamily::Mult => CodeSpec::mult(wire.p, wire.s, wire.n, wire.k, wire.alphas)?,
            CodeFamily::Rlc => match wire.generator_matrix {
                Some(entries) => {
                    if entries.len() != wire.k * wire.s * wire.n {
                        return Err(Error::Deserialize(format!(
                            "generator_matrix has {} entries, expected k·s·n = {}",
                            entries.len(),
                            wire.k * wire.s * wire.n
                        )));
                    }
                    CodeSpec::rlc_from_matrix(
                        wire.p,
                        wire.s,
                        wire.n,
                        wire.k,
                        MatrixFp::new(wire.p, wire.k, wire.s * wire.n, entries),
                    )?
                }
                None => {
                    let seed = wire.seed.ok_or_else(|| {
                        Error::Deserialize("linear-code spec requires generator_matrix or seed".into())
                    })?;
                    sample_code(CodeFamily::Rlc, wire.p, wire.s, wire.n, wire.k, seed)?
                }
            },
            CodeFamily::Rrs => match wire.alphas {
                Some(alphas) => CodeSpec::rrs_from_points(wire.p, wire.n, wire.k, alphas)?,
                None => {
                    let seed = wire.seed.ok_or_else(|| {
                        Error::Deserialize("random RS spec requires alphas or seed".into())
                    })?;
                    sample_code(CodeFamily::Rrs, wire.p, wire.s, wire.n, wire.k, seed)?
                }
            },
        };
        // Preserve sampling metadata on explicit specs that carry it.
        if spec.seed.is_none() {
            spec.seed = wire.seed;
            spec.rng = wire.rng;
        }
        Ok(spec)
    }
}

#[derive(Serialize, Deserialize)]
struct CodeSpecWire {
    family: String,
    p: u64,
    s: usize,
    n: usize,
    k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alphas: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator_matrix: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rng: Option<String>,
}

fn validate_common(p: u64, s: usize, n: usize, k: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 || n == 0 {
        return Err(Error::InvalidCode("s and n must be positive".into()));
    }
    if k == 0 || k > s * n {
        return Err(Error::InvalidCode(format!(
            "message dimension must satisfy 1 ≤ k ≤ s·n, got k = {k}, s·n = {}",
            s * n
        )));
    }
    Ok(())
}

fn validated_points(p: u64, n: usize, alphas: Vec<u64>) -> Result<Vec<u64>> {
    if alphas.len() != n {
        return Err(Error::InvalidCode(format!(
            "expected {n} evaluation points, got {}",
            alphas.len()
        )));
    }
    Ok(alphas.into_iter().map(|a| a % p).collect())
}

fn distinct(points: &[u64]) -> bool {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Default folded-RS evaluation points `α_i = γ^((i−1)s)`, which make the
/// `n·s` orbit points `γ^0, …, γ^(ns−1)` pairwise distinct provided the order
/// of `γ` is at least `n·s`.
pub fn default_frs_points(p: u64, gamma: u64, s: usize, n: usize) -> Result<Vec<u64>> {
    let field = PrimeField::new(p)?;
    let ns = (n * s) as u64;
    if ns > p - 1 {
        return Err(Error::invalid(format!(
            "infeasible: n·s = {ns} exceeds p − 1 = {}, orbit points must collide",
            p - 1
        )));
    }
    let gamma = field.element(gamma);
    if gamma.is_zero() {
        return Err(Error::invalid("gamma must be nonzero".into()));
    }
    // Walk γ^t; seeing 1 before t = n·s means the orbit wraps early.
    let mut power = field.one();
    for t in 1..ns {
        power = power * gamma;
        if power.value() == 1 {
            return Err(Error::invalid(format!(
                "infeasible: gamma has order {t}, smaller than n·s = {ns}"
            )));
        }
    }
    Ok((0..n).map(|i| gamma.pow((i * s) as u64).value()).collect())
}

/// Direct folded-RS encoding of a polynomial: symbol `i` evaluates `f` along
/// the orbit `α_i, γα_i, …, γ^(s−1)α_i`. This is an independent route from
/// [`CodeSpec::encode`], which multiplies by the evaluation matrices.
pub fn frs_encode(spec: &CodeSpec, f: &DensePoly) -> Result<Codeword> {
    if spec.family != CodeFamily::Frs {
        return Err(Error::invalid("spec is not a folded RS code"));
    }
    check_message_poly(spec, f)?;
    let field = PrimeField::new(spec.p)?;
    let gamma = field.element(spec.gamma.unwrap());
    let mut codeword = Vec::with_capacity(spec.n);
    for &alpha in spec.alphas.as_ref().unwrap() {
        let mut point = field.element(alpha);
        let mut symbol = Vec::with_capacity(spec.s);
        for _ in 0..spec.s {
            symbol.push(f.eval(point).value());
            point = point * gamma;
        }
        codeword.push(symbol);
    }
    Ok(codeword)
}

/// Direct multiplicity encoding: symbol `i` lists the Hasse derivatives
/// `H^(0)f(α_i), …, H^(s−1)f(α_i)`.
pub fn mult_encode(spec: &CodeSpec, f: &DensePoly) -> Result<Codeword> {
    if spec.family != CodeFamily::Mult {
        return Err(Error::invalid("spec is not a multiplicity code"));
    }
    check_message_poly(spec, f)?;
    let field = PrimeField::new(spec.p)?;
    let derivatives: Vec<DensePoly> = (0..spec.s).map(|j| f.hasse_derivative(j)).collect();
    Ok(spec
        .alphas
        .as_ref()
        .unwrap()
        .iter()
        .map(|&alpha| {
            let x = field.element(alpha);
            derivatives.iter().map(|d| d.eval(x).value()).collect()
        })
        .collect())
}

fn check_message_poly(spec: &CodeSpec, f: &DensePoly) -> Result<()> {
    if f.modulus() != spec.p {
        return Err(Error::invalid(format!(
            "polynomial over F_{} does not match code over F_{}",
            f.modulus(),
            spec.p
        )));
    }
    if f.degree().map_or(false, |d| d >= spec.k) {
        return Err(Error::invalid(format!(
            "degree {} exceeds message bound k − 1 = {}",
            f.degree().unwrap(),
            spec.k - 1
        )));
    }
    Ok(())
}

/// Samples a random code deterministically from `seed`: a random linear code
/// with independent uniform generator entries, or a Reed–Solomon code on `n`
/// distinct points drawn by partial Fisher–Yates shuffle of `F_p`.
pub fn sample_code(family: CodeFamily, p: u64, s: usize, n: usize, k: usize, seed: u64) -> Result<CodeSpec> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    match family {
        CodeFamily::Rlc => {
            validate_common(p, s, n, k)?;
            let entries: Vec<u64> = (0..k * s * n).map(|_| uniform_below(&mut rng, p)).collect();
            let mut spec = CodeSpec::rlc_from_matrix(p, s, n, k, MatrixFp::new(p, k, s * n, entries))?;
            spec.seed = Some(seed);
            spec.rng = Some(SAMPLER_RNG_NAME.to_string());
            Ok(spec)
        }
        CodeFamily::Rrs => {
            if s != 1 {
                return Err(Error::invalid("random RS codes use s = 1"));
            }
            validate_common(p, 1, n, k)?;
            if p < n as u64 {
                return Err(Error::invalid(format!(
                    "cannot pick {n} distinct points from F_{p}"
                )));
            }
            if p > MAX_SAMPLED_FIELD {
                return Err(Error::invalid(format!(
                    "point sampling materializes F_p and is capped at p ≤ {MAX_SAMPLED_FIELD}"
                )));
            }
            let mut pool: Vec<u64> = (0..p).collect();
            for i in 0..n {
                let j = i as u64 + uniform_below(&mut rng, p - i as u64);
                pool.swap(i, j as usize);
            }
            pool.truncate(n);
            let mut spec = CodeSpec::rrs_from_points(p, n, k, pool)?;
            spec.seed = Some(seed);
            spec.rng = Some(SAMPLER_RNG_NAME.to_string());
            Ok(spec)
        }
        CodeFamily::Frs | CodeFamily::Mult => {
            Err(Error::invalid("only linear and RS families are sampled; folded RS and multiplicity codes are explicit"))
        }
    }
}

/// Unbiased uniform draw from `[0, bound)` by rejection on `next_u64`; the
/// draw sequence depends only on the ChaCha20 stream, never on library
/// version details.
fn uniform_below(rng: &mut ChaCha20Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// All `p^k` message vectors in deterministic order: ascending base-`p`
/// index with entry 0 as the least-significant digit.
pub fn all_messages(p: u64, k: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.checked_pow(k as u32).expect("message space exceeds u64");
    (0..total).map(move |idx| {
        let mut v = Vec::with_capacity(k);
        let mut rem = idx;
        for _ in 0..k {
            v.push(rem % p);
            rem /= p;
        }
        v
    })
}
