use num_complex::Complex;

use crate::{Error, Real, Result};

// Godfrey's coefficients, g = 607/128.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

fn check_pole<T: Real>(z: Complex<T>) -> Result<()> {
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round() {
        return Err(Error::PoleAtNonpositiveInteger(z.re.to_i64().unwrap_or(i64::MIN)));
    }
    Ok(())
}

fn ln_gamma_lanczos<T: Real>(z: Complex<T>) -> Complex<T> {
    let z = z - T::one();
    let mut x = Complex::new(T::lit(LANCZOS[0]), T::zero());
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        x = x + Complex::new(T::lit(c), T::zero()) / (z + T::lit(k as f64));
    }
    let t = z + T::lit(LANCZOS_G + 0.5);
    let half_ln_2pi = T::lit(0.918_938_533_204_672_741_78);
    (z + T::lit(0.5)) * t.ln() - t + x.ln() + half_ln_2pi
}

/// Complex log-gamma (any branch; only `exp` of it is meaningful).
pub fn ln_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    if z.re < T::lit(0.5) {
        let pi = T::PI();
        let s = (z * pi).sin();
        Ok(Complex::new(pi.ln(), T::zero()) - s.ln() - ln_gamma_lanczos(Complex::new(T::one(), T::zero()) - z))
    } else {
        Ok(ln_gamma_lanczos(z))
    }
}

/// Complex Gamma function; reflection for Re z < 1/2.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    if z.re < T::lit(0.5) {
        let pi = T::PI();
        let one = Complex::new(T::one(), T::zero());
        Ok(Complex::new(pi, T::zero()) / ((z * pi).sin() * ln_gamma_lanczos(one - z).exp()))
    } else {
        Ok(ln_gamma_lanczos(z).exp())
    }
}
