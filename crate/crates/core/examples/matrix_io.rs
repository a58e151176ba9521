//! Reading and writing matrix files.

use numrad::io::{parse_matrix, to_csv, to_json};
use numrad::{Complex64, ComplexMatrix};

fn main() -> numrad::Result<()> {
    let csv = "# weighted shift\n0, 2, 0\n0, 0, 3\n4, 0, 0\n";
    let a = parse_matrix(csv.as_bytes())?;
    println!("{}", to_json(&a, Some("shift")));
    print!("{}", to_csv(&a)?);

    let z = ComplexMatrix::new(2, vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.5)])?;
    let back = parse_matrix(to_json(&z, None).as_bytes())?;
    assert_eq!(back, z);
    println!("\ncomplex entries need JSON: {}", to_csv(&z).unwrap_err());

    match parse_matrix(b"1, 2\n3, oops\n") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
