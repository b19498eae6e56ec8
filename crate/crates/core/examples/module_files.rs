//! Reading and writing module files, with field dispatch at the boundary.
//!
//! cargo run --example module_files

use sheafcoh::harness::{parse_module, AnyPresentation};
use sheafcoh::invariants::level;
use sheafcoh::with_presentation;

const FILES: [&str; 3] = [
    r#"{"ring":{"char":0,"vars":3},"generators":[0,0,0],"relations":[["x0","x1","x2"]]}"#,
    r#"{"ring":{"char":5,"vars":3},"generators":[0],"relations":[["x0^2 + x1*x2"]]}"#,
    r#"{"ring":{"char":5,"vars":3},"generators":[0],"relations":[["x0^2 + x1*"]]}"#,
];

fn main() {
    for text in FILES {
        match parse_module(text.as_bytes()) {
            Ok(m) => {
                let field = match &m {
                    AnyPresentation::Rational(_) => "Q".to_string(),
                    AnyPresentation::Prime(p) => format!("F_{}", p.ring().characteristic()),
                };
                let lambda = with_presentation!(&m, p => level(p).value);
                println!("over {field}: level {lambda}");
                println!("{}", m.to_module_file().to_json());
            }
            Err(e) => println!("error: {e}"),
        }
    }
}
