//! Cylinder functions of integer order zero and one.
//!
//! `J0`, `J1`, `Y0` and `Y1` use the classical two-regime rational
//! approximations: a rational function in `x²` on `[0, 5]` and the Hankel
//! amplitude–phase expansion (two rational functions in `25/x²`) beyond.
//! Absolute error is below `1e-15` on `[0, 30]` and stays below `1e-10`
//! up to `x = 1e4`; past that the phase `x - π/4` loses digits linearly
//! with `x`.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};

/// `sqrt(2/π)`
const SQRT_FRAC_2_PI: f64 = 0.797_884_560_802_865_4;

/// Squares of the first two zeros of `J0`.
const J0_DR1: f64 = 5.783_185_962_946_784;
const J0_DR2: f64 = 30.471_262_343_662_087;

/// Squares of the first two zeros of `J1`.
const J1_Z1: f64 = 1.468_197_064_212_389_3e1;
const J1_Z2: f64 = 4.921_845_632_169_46e1;

/// Which solution of Bessel's equation of order `ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CylinderKind {
    /// `J_ν`, regular at the origin.
    FirstKind,
    /// `Y_ν`, logarithmically singular at the origin.
    SecondKind,
}

/// Evaluates `J_order(x)` or `Y_order(x)` for `order ∈ {0, 1}`.
pub fn bessel(kind: CylinderKind, order: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    match kind {
        CylinderKind::FirstKind if x < 0.0 => Err(Error::Domain(format!(
            "J_{order} requires x >= 0, got {x}"
        ))),
        CylinderKind::SecondKind if x <= 0.0 => Err(Error::Domain(format!(
            "Y_{order} requires x > 0, got {x}"
        ))),
        _ => match (kind, order) {
            (CylinderKind::FirstKind, 0) => Ok(j0(x)),
            (CylinderKind::FirstKind, 1) => Ok(j1(x)),
            (CylinderKind::SecondKind, 0) => Ok(y0(x)),
            (CylinderKind::SecondKind, 1) => Ok(y1(x)),
            _ => Err(Error::Domain(format!(
                "unsupported order {order}, only 0 and 1 are available"
            ))),
        },
    }
}

/// `d/dr C0(λ r) = -λ C1(λ r)` where `C` is `J` or `Y` per `kind`.
///
/// The chain-rule factor `λ` is included: the boundary forms differentiate
/// with respect to the radius, not the Bessel argument.
pub fn radial_derivative(kind: CylinderKind, lambda: f64, r: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(r > 0.0) {
        return Err(Error::Domain(format!(
            "radial derivative requires lambda > 0 and r > 0, got lambda={lambda}, r={r}"
        )));
    }
    Ok(-lambda * bessel(kind, 1, lambda * r)?)
}

/// Bessel function of the first kind, order zero. Even in `x`.
pub fn j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= 5.0 {
        let z = x * x;
        if x < 1e-5 {
            return 1.0 - z / 4.0;
        }
        let p = (z - J0_DR1) * (z - J0_DR2);
        return p * polevl(z, &J0_RP) / p1evl(z, &J0_RQ);
    }
    let w = 5.0 / x;
    let q = 25.0 / (x * x);
    let p = polevl(q, &J0_PP) / polevl(q, &J0_PQ);
    let q = polevl(q, &J0_QP) / p1evl(q, &J0_QQ);
    let xn = x - FRAC_PI_4;
    let p = p * xn.cos() - w * q * xn.sin();
    p * SQRT_FRAC_2_PI / x.sqrt()
}

/// Bessel function of the second kind, order zero.
///
/// Returns `-inf` at zero and `NaN` for negative arguments.
pub fn y0(x: f64) -> f64 {
    if x == 0.0 {
        return f64::NEG_INFINITY;
    } else if x < 0.0 || x.is_nan() {
        return f64::NAN;
    }
    if x <= 5.0 {
        // Rational part approximates y0(x) - (2/π) ln(x) j0(x).
        let z = x * x;
        let w = polevl(z, &J0_YP) / p1evl(z, &J0_YQ);
        return w + 2.0 / PI * x.ln() * j0(x);
    }
    let w = 5.0 / x;
    let z = 25.0 / (x * x);
    let p = polevl(z, &J0_PP) / polevl(z, &J0_PQ);
    let q = polevl(z, &J0_QP) / p1evl(z, &J0_QQ);
    let xn = x - FRAC_PI_4;
    let p = p * xn.sin() + w * q * xn.cos();
    p * SQRT_FRAC_2_PI / x.sqrt()
}

/// Bessel function of the first kind, order one. Odd in `x`.
pub fn j1(x: f64) -> f64 {
    if x < 0.0 {
        return -j1(-x);
    }
    if x <= 5.0 {
        let z = x * x;
        let w = polevl(z, &J1_RP) / p1evl(z, &J1_RQ);
        return w * x * (z - J1_Z1) * (z - J1_Z2);
    }
    let w = 5.0 / x;
    let z = w * w;
    let p = polevl(z, &J1_PP) / polevl(z, &J1_PQ);
    let q = polevl(z, &J1_QP) / p1evl(z, &J1_QQ);
    let xn = x - 0.75 * PI;
    let p = p * xn.cos() - w * q * xn.sin();
    p * SQRT_FRAC_2_PI / x.sqrt()
}

/// Bessel function of the second kind, order one.
///
/// Returns `-inf` at zero and `NaN` for negative arguments.
pub fn y1(x: f64) -> f64 {
    if x == 0.0 {
        return f64::NEG_INFINITY;
    } else if x < 0.0 || x.is_nan() {
        return f64::NAN;
    }
    if x <= 5.0 {
        let z = x * x;
        let w = x * (polevl(z, &J1_YP) / p1evl(z, &J1_YQ));
        return w + 2.0 / PI * (j1(x) * x.ln() - 1.0 / x);
    }
    let w = 5.0 / x;
    let z = w * w;
    let p = polevl(z, &J1_PP) / polevl(z, &J1_PQ);
    let q = polevl(z, &J1_QP) / p1evl(z, &J1_QQ);
    let xn = x - 0.75 * PI;
    let p = p * xn.sin() + w * q * xn.cos();
    p * SQRT_FRAC_2_PI / x.sqrt()
}

/// Horner evaluation, coefficients from highest degree down.
fn polevl(x: f64, coef: &[f64]) -> f64 {
    coef.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Like [`polevl`] with an implicit leading coefficient of one.
fn p1evl(x: f64, coef: &[f64]) -> f64 {
    coef.iter().fold(1.0, |acc, &c| acc * x + c)
}

const J0_RP: [f64; 4] = [
    -4.794432209782018e9,
    1.9561749194655657e12,
    -2.4924834436096772e14,
    9.708622510473064e15,
];

const J0_RQ: [f64; 8] = [
    4.99563147152651e2,
    1.737854016763747e5,
    4.844096583399621e7,
    1.1185553704535683e10,
    2.112775201154892e12,
    3.1051822985742256e14,
    3.1812195594320496e16,
    1.7108629408104315e18,
];

const J0_PP: [f64; 7] = [
    7.969367292973471e-4,
    8.283523921074408e-2,
    1.239533716464143,
    5.447250030587687,
    8.74716500199817,
    5.303240382353949,
    1.0,
];

const J0_PQ: [f64; 7] = [
    9.244088105588637e-4,
    8.562884743544745e-2,
    1.2535274390105895,
    5.470977403304171,
    8.761908832370695,
    5.306052882353947,
    1.0,
];

const J0_QP: [f64; 8] = [
    -1.1366383889846916e-2,
    -1.2825271867050931,
    -1.9553954425773597e1,
    -9.320601521237683e1,
    -1.7768116798048806e2,
    -1.4707750515495118e2,
    -5.141053267665993e1,
    -6.050143506007285,
];

const J0_QQ: [f64; 7] = [
    6.43178256118178e1,
    8.564300259769806e2,
    3.8824018360540163e3,
    7.240467741956525e3,
    5.930727011873169e3,
    2.0620933166032783e3,
    2.420057402402914e2,
];

const J0_YP: [f64; 8] = [
    1.5592436785523574e4,
    -1.466392959039716e7,
    5.435264770518765e9,
    -9.821360657179115e11,
    8.75906394395367e13,
    -3.466283033847297e15,
    4.4273326857256984e16,
    -1.8495080043698668e16,
];

const J0_YQ: [f64; 7] = [
    1.0412835366425984e3,
    6.26107330137135e5,
    2.6891963339381415e8,
    8.64002487103935e10,
    2.0297961275010555e13,
    3.1715775284297505e15,
    2.5059625617265306e17,
];

const J1_RP: [f64; 4] = [
    -8.999712257055594e8,
    4.5222829799819403e11,
    -7.274942452218183e13,
    3.682957328638529e15,
];

const J1_RQ: [f64; 8] = [
    6.208364781180543e2,
    2.5698725675774884e5,
    8.351467914319493e7,
    2.215115954797925e10,
    4.749141220799914e12,
    7.843696078762359e14,
    8.952223361846274e16,
    5.322786203326801e18,
];

const J1_PP: [f64; 7] = [
    7.621256162081731e-4,
    7.313970569409176e-2,
    1.1271960812968493,
    5.112079511468076,
    8.424045901417724,
    5.214515986823615,
    1.0,
];

const J1_PQ: [f64; 7] = [
    5.713231280725487e-4,
    6.884559087544954e-2,
    1.105142326340617,
    5.073863861286015,
    8.399855543276042,
    5.209828486823619,
    1.0,
];

const J1_QP: [f64; 8] = [
    5.108625947501766e-2,
    4.982138729512334,
    7.582382841325453e1,
    3.667796093601508e2,
    7.108563049989261e2,
    5.974896124006136e2,
    2.1168875710057213e2,
    2.5207020585802372e1,
];

const J1_QQ: [f64; 7] = [
    7.423732770356752e1,
    1.0564488603826283e3,
    4.986410583376536e3,
    9.562318924047562e3,
    7.997041604473507e3,
    2.8261927851763908e3,
    3.360936078106983e2,
];

const J1_YP: [f64; 6] = [
    1.2632047479017804e9,
    -6.473558763791603e11,
    1.1450951154182373e14,
    -8.127702555013251e15,
    2.024394757135949e17,
    -7.788771962659501e17,
];

const J1_YQ: [f64; 8] = [
    5.943015923461282e2,
    2.3556409294306856e5,
    7.348119444597217e7,
    1.8760131610870617e10,
    3.8823127749623857e12,
    6.205577271469538e14,
    6.871410873553005e16,
    3.9727060811656064e18,
];


#[cfg(test)]
mod tests {
    use super::*;

    /// `(x, J0, J1, Y0, Y1)` from 40-digit arithmetic.
    const REFERENCE: [(f64, f64, f64, f64, f64); 16] = [
        (1e-6, 0.99999999999975, 4.9999999999993748e-7, -8.8690314816594437, -636619.77237217504),
        (0.001, 0.99999975000001562, 0.00049999993750000261, -4.4714166113759233, -636.62216723113941),
        (0.1, 0.99750156206604003, 0.049937526036242, -1.5342386513503668, -6.4589510947020266),
        (0.5, 0.9384698072408129, 0.24226845767487389, -0.44451873350670656, -1.4714723926702431),
        (1.0, 0.76519768655796655, 0.44005058574493352, 0.088256964215676958, -0.78121282130028872),
        (2.5, -0.048383776468197996, 0.49709410246427404, 0.49807035961523189, 0.1459181379667858),
        (4.99, -0.1808669025116955, -0.32644149050101633, -0.30702210182564703, 0.15124027548614782),
        (5.0, -0.1775967713143383, -0.32757913759146522, -0.30851762524903378, 0.14786314339122684),
        (5.01, -0.17431543205674924, -0.32868309571784986, -0.30997933991664647, 0.14447857825491056),
        (7.3, 0.2882169476350144, 0.082570430493257831, 0.062773886374037598, -0.28459437186807211),
        (8.0, 0.17165080713755391, 0.23463634685391462, 0.22352148938756622, -0.15806046173124749),
        (12.5, 0.1468840547004211, -0.16548380461475972, -0.17121430684466929, -0.15383825653750118),
        (31.0, 0.051208145304542249, -0.1330243166663142, -0.13383266050364433, -0.053372826957321594),
        (100.0, 0.019985850304223122, -0.077145352014112158, -0.077244313365083152, -0.020372312002759793),
        (777.7, -0.016850060564150011, -0.023133733295178584, -0.023122895255650137, 0.016835197847755943),
        (1e4, -0.0070961603533888015, 0.0036474507555295803, 0.0036478055589866059, 0.0070963427525364951),
    ];

    #[test]
    fn matches_reference_table() {
        for &(x, rj0, rj1, ry0, ry1) in &REFERENCE {
            // Y1 is large near the origin; compare it relatively there.
            let y1_scale = ry1.abs().max(1.0);
            assert!((j0(x) - rj0).abs() <= 1e-10, "J0({x})");
            assert!((j1(x) - rj1).abs() <= 1e-10, "J1({x})");
            assert!((y0(x) - ry0).abs() <= 1e-10, "Y0({x})");
            assert!((y1(x) - ry1).abs() <= 1e-10 * y1_scale, "Y1({x})");
        }
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel(CylinderKind::FirstKind, 0, 0.0), Ok(1.0));
        assert_eq!(bessel(CylinderKind::FirstKind, 1, 0.0), Ok(0.0));
    }

    #[test]
    fn domain_errors() {
        assert!(bessel(CylinderKind::SecondKind, 0, 0.0).is_err());
        assert!(bessel(CylinderKind::SecondKind, 1, -1.0).is_err());
        assert!(bessel(CylinderKind::FirstKind, 0, -1e-9).is_err());
        assert!(bessel(CylinderKind::FirstKind, 2, 1.0).is_err());
        assert!(bessel(CylinderKind::FirstKind, 0, f64::NAN).is_err());
        assert!(radial_derivative(CylinderKind::FirstKind, 0.0, 1.0).is_err());
        assert!(radial_derivative(CylinderKind::SecondKind, 1.0, -1.0).is_err());
    }

    #[test]
    fn first_zero_of_j0() {
        let x = bessel(CylinderKind::FirstKind, 0, 2.404_825_557_695_773).unwrap();
        assert!(x.abs() <= 1e-10);
    }

    #[test]
    fn raw_functions_outside_domain() {
        assert!(y0(-1.0).is_nan());
        assert_eq!(y1(0.0), f64::NEG_INFINITY);
        assert_eq!(j1(-2.0), -j1(2.0));
        assert_eq!(j0(-2.0), j0(2.0));
    }

    #[test]
    fn derivative_near_origin_vanishes() {
        let d = radial_derivative(CylinderKind::FirstKind, 1.0, 1e-12).unwrap();
        assert!(d.abs() < 1e-12);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-6;
        let fd = (j0(2.0 * (1.5 + h)) - j0(2.0 * (1.5 - h))) / (2.0 * h);
        let d = radial_derivative(CylinderKind::FirstKind, 2.0, 1.5).unwrap();
        assert_eq!(d, -2.0 * j1(3.0));
        assert!((d - fd).abs() <= 1e-6);

        let fd = (y0(1.0 + h) - y0(1.0 - h)) / (2.0 * h);
        let d = radial_derivative(CylinderKind::SecondKind, 1.0, 1.0).unwrap();
        assert_eq!(d, -y1(1.0));
        assert!((d - fd).abs() <= 1e-6);
    }
}
