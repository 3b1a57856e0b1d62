use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use zernike_core::format::{
    format_real, parse_expansion, parse_polynomial, write_expansion, write_polynomial,
};
use zernike_core::{
    fitting, noll_index, noll_inverse, polynomial_to_zernike, selftest, zernike_to_polynomial,
    PointDisk, RadialPoly, ZernikeTerm,
};

/// Every handler returns whether the run succeeded; `Err` is a hard failure.
type Outcome = Result<bool>;

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) if path.as_os_str() != "-" => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        _ => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn noll(n: Option<u32>, m: Option<i32>, j: Option<u64>) -> Outcome {
    match (n, m, j) {
        (Some(n), Some(m), None) => println!("{}", noll_index(n, m)?),
        (None, None, Some(j)) => {
            let (n, m) = noll_inverse(j)?;
            println!("{n} {m}");
        }
        _ => bail!("give either both --n and --m, or --j alone"),
    }
    Ok(true)
}

pub fn eval(
    n: u32,
    m: i32,
    cartesian: (Option<f64>, Option<f64>),
    polar: (Option<f64>, Option<f64>),
) -> Outcome {
    let pt = match (cartesian, polar) {
        ((Some(x), Some(y)), (None, None)) => PointDisk::new(x, y),
        ((None, None), (Some(r), Some(phi))) => PointDisk::from_polar(r, phi),
        _ => bail!("incomplete coordinates: give --x and --y, or --r and --phi"),
    };
    // surface parameter errors instead of the silent zero prefactor
    RadialPoly::new(n, m)?;
    println!("{}", format_real(ZernikeTerm::unit(n, m).eval(pt)));
    Ok(true)
}

pub fn product(file_a: &Path, file_b: &Path, out: Option<&Path>) -> Outcome {
    let a = parse_expansion(&read_input(file_a)?)
        .with_context(|| format!("parsing {}", file_a.display()))?;
    let b = parse_expansion(&read_input(file_b)?)
        .with_context(|| format!("parsing {}", file_b.display()))?;
    write_output(out, &write_expansion(&(&a * &b)))?;
    Ok(true)
}

pub fn z2p(file: &Path, out: Option<&Path>) -> Outcome {
    let e = parse_expansion(&read_input(file)?)
        .with_context(|| format!("parsing {}", file.display()))?;
    write_output(out, &write_polynomial(&zernike_to_polynomial(&e)))?;
    Ok(true)
}

pub fn p2z(file: &Path, out: Option<&Path>) -> Outcome {
    let p = parse_polynomial(&read_input(file)?)
        .with_context(|| format!("parsing {}", file.display()))?;
    write_output(out, &write_expansion(&polynomial_to_zernike(&p)))?;
    Ok(true)
}

pub fn fit(input: &Path, max_order: u32, zernike: bool) -> Outcome {
    let data = fitting::load_samples(&read_input(input)?)
        .with_context(|| format!("parsing {}", input.display()))?;
    let result = fitting::fit(&data, max_order)?;
    let mut text = if zernike {
        write_expansion(&polynomial_to_zernike(&result.polynomial))
    } else {
        write_polynomial(&result.polynomial)
    };
    text.push_str(&format!(
        "# residual_norm {} samples {}\n",
        format_real(result.residual_norm),
        result.sample_count
    ));
    write_output(None, &text)?;
    Ok(true)
}

pub fn selftest() -> Outcome {
    println!("# Noll index table");
    println!("# j n m");
    for j in 1..=15u64 {
        let (n, m) = noll_inverse(j)?;
        println!("{j} {n} {m}");
    }
    let report = selftest::run();
    for check in &report.checks {
        println!("{check}");
    }
    Ok(report.all_passed())
}
