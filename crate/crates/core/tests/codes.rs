use std::sync::Arc;

use deephole_core::codefile::{export_code_spec, load_code, parse_builtin, parse_code_spec};
use deephole_core::dist::{covering_radius, AlgoChoice, Budgets};
use deephole_core::{default_glynn_w, glynn_code, is_mds, min_distance, prs_code, Error, Field};

#[test]
fn load_code_reads_files_and_builtins() {
    let path = std::env::temp_dir().join(format!("deephole-codes-{}.code", std::process::id()));
    let code = parse_builtin("prs --q 7 --k 3").unwrap();
    std::fs::write(&path, export_code_spec(&code)).unwrap();
    let loaded = load_code(path.to_str().unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(loaded.same_code(&code));
    assert!(load_code("prs:7:3").unwrap().same_code(&code));
    assert!(load_code("/no/such/file.code").is_err());
}

#[test]
fn custom_modulus_survives_export() {
    let text = "# F_9 via x^2 + 2x + 2\n3^2:2,2,1\n1,1,1,1\n0,1,3,5\n";
    let code = parse_code_spec(text).unwrap();
    assert_eq!(code.field().modulus(), &[2, 2, 1]);
    let again = parse_code_spec(&export_code_spec(&code)).unwrap();
    assert!(again.same_code(&code));
    assert_eq!(again.field().modulus(), code.field().modulus());
}

#[test]
fn glynn_and_prs10_are_both_mds_with_radius_four() {
    let f9 = Arc::new(Field::of_order(9).unwrap());
    let glynn = glynn_code(f9.clone(), default_glynn_w(&f9)).unwrap();
    let prs = prs_code(f9.clone(), 5).unwrap();
    for code in [&glynn, &prs] {
        assert!(is_mds(code));
        assert_eq!(min_distance(code, 100_000_000).unwrap(), 6);
        let rep = covering_radius(code, AlgoChoice::Syndrome, Budgets::default()).unwrap();
        assert_eq!(rep.rho, 4);
    }
    assert!(!glynn.same_code(&prs));
    assert!(matches!(glynn_code(f9.clone(), f9.elem(1).unwrap()), Err(Error::Precondition(_))));
}
