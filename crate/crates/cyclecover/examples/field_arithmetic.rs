//! Exact scalars: rationals with no rounding, prime fields on machine words.

use cyclecover::arith::{ge_sqrt_minus_one, ratio, rational_string, FieldSpec, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Rational arithmetic is exact: 1/3 + 1/6 is exactly 1/2.
    let q = FieldSpec::Rational;
    let third = Scalar::parse(q, "1/3")?;
    let sixth = Scalar::parse(q, "1/6")?;
    println!("1/3 + 1/6 = {}", third.add(&sixth)?);

    // Prime fields reduce canonically; division is multiplication by the
    // modular inverse.
    let f7 = FieldSpec::prime(7)?;
    let five = f7.integer(5);
    println!("in GF(7): 5^-1 = {}, 5 * 5^-1 = {}", five.inverse()?, five.mul(&five.inverse()?)?);
    println!("in GF(7): -3 = {}", f7.integer(-3));

    // Composite moduli are rejected up front.
    println!("field 6? {:?}", FieldSpec::prime(6).unwrap_err().to_string());

    // Square-root inequalities are decided exactly by squaring: is
    // x >= sqrt(y) - 1, for x = 1 and y = 4? (1+1)^2 = 4 >= 4, so yes.
    let x = ratio(1, 1);
    let y = ratio(4, 1);
    println!("1 >= sqrt(4) - 1: {}", ge_sqrt_minus_one(&x, &y));
    // And for y just above the threshold it flips.
    let y = ratio(401, 100);
    println!("1 >= sqrt(4.01) - 1: {}", ge_sqrt_minus_one(&x, &y));

    println!("7/3 prints as {}", rational_string(&ratio(7, 3)));
    Ok(())
}
