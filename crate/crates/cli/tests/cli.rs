use laspa_cli::{format_complex_list, parse_complex_list, run};
use laspa_core::Complex64;
use proptest::prelude::*;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("laspa".to_string()).chain(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn parse_roots(text: &str) -> Vec<Complex64> {
    text.lines()
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            Complex64::new(f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect()
}

#[test]
fn solve_coeffs_finds_integer_roots() {
    let (code, out, _) = run_args(&["solve", "--coeffs", "24,-50,35,-10,1"]);
    assert_eq!(code, 0);
    let roots = parse_roots(&out);
    assert_eq!(roots.len(), 4);
    for (r, want) in roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((r - Complex64::new(want, 0.0)).norm() < 1e-10, "{r}");
    }
    for line in out.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[3], "true");
        // 17 significant digits, '.' decimal separator regardless of locale
        assert!(fields[0].contains('.') && fields[0].contains('e'));
        assert!(!line.contains(','));
    }
}

#[test]
fn solve_roots_and_coeffs_agree() {
    let (c1, from_roots, _) = run_args(&["solve", "--roots", "1,0+1i,-1,0-1i,2+0.5i"]);
    let coeffs = laspa_core::Polynomial::from_roots(
        &parse_complex_list("1,0+1i,-1,0-1i,2+0.5i").unwrap(),
        Complex64::new(1.0, 0.0),
    )
    .unwrap();
    let text = format_complex_list(coeffs.coeffs());
    let (c2, from_coeffs, _) = run_args(&["solve", "--coeffs", &text]);
    assert_eq!((c1, c2), (0, 0));
    let (a, b) = (parse_roots(&from_roots), parse_roots(&from_coeffs));
    assert_eq!(a.len(), 5);
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).norm() < 1e-8);
    }
}

#[test]
fn parse_failures_exit_two() {
    let (code, out, err) = run_args(&["solve", "--coeffs", "1,,2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("entry 2"), "{err}");
    let (code, _, _) = run_args(&["solve"]);
    assert_eq!(code, 2);
}

#[test]
fn zero_leading_coefficient_is_numeric_failure() {
    let (code, _, err) = run_args(&["solve", "--coeffs", "1,2,0"]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn radius_reports_disks_and_bound() {
    let (code, out, _) = run_args(&["radius", "--coeffs", "-1,0,0,0,1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    let bound: f64 = lines[4].strip_prefix("apriori ").unwrap().parse().unwrap();
    for l in &lines[..4] {
        let r: f64 = l.split_whitespace().nth(2).unwrap().parse().unwrap();
        assert!(r > 0.0 && bound <= r);
    }
}

#[test]
fn radius_rejects_low_degree() {
    let (code, out, err) = run_args(&["radius", "--coeffs", "-6,11,-6,1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("degree must exceed 3"), "{err}");
}

#[test]
fn render_writes_ppm_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("basins.ppm");
    let stats_path = dir.path().join("basins.txt");
    let (code, out, _) = run_args(&[
        "render",
        "--roots",
        "1,0+1i,-1,0-1i",
        "--out",
        out_path.to_str().unwrap(),
        "--stats",
        stats_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), format!("wrote {} 256x256", out_path.display()));
    let bytes = std::fs::read(&out_path).unwrap();
    assert_eq!(bytes.len(), 15 + 3 * 256 * 256);
    assert!(bytes.starts_with(b"P6\n256 256\n255\n"));
    let stats = std::fs::read_to_string(&stats_path).unwrap();
    let total: usize = stats
        .lines()
        .map(|l| {
            l.split_whitespace()
                .nth(1)
                .unwrap()
                .parse::<usize>()
                .unwrap()
        })
        .sum();
    assert_eq!(total, 256 * 256);
}

#[test]
fn render_low_degree_uses_proximity() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("two.ppm");
    let (code, _, _) = run_args(&[
        "render",
        "--roots",
        "-1,1",
        "--px",
        "32",
        "--center",
        "0.5+0.5i",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(&out_path).unwrap().len(), 13 + 3 * 32 * 32);
}

#[test]
fn render_rejects_repeated_roots() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("bad.ppm");
    let (code, _, _) = run_args(&[
        "render",
        "--roots",
        "1,1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
}

proptest! {
    #[test]
    fn format_parse_round_trip(
        xs in prop::collection::vec((-1e12f64..1e12, -1e12f64..1e12), 1..12)
    ) {
        let zs: Vec<Complex64> = xs.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        prop_assert_eq!(parse_complex_list(&format_complex_list(&zs)).unwrap(), zs);
    }
}
