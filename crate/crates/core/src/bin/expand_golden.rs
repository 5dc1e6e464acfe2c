//! Regenerates `data/*.csv` from `data/shorthand/*.txt`.
//!
//! Usage: `expand-golden [DATA_DIR]` (defaults to the crate's `data/`).

use std::path::PathBuf;
use std::process::ExitCode;

use ribbonmod::golden::{parse_shorthand_file, write_csv, GoldenTable};

fn main() -> ExitCode {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    for table in GoldenTable::ALL {
        let src = dir.join("shorthand").join(format!("{}.txt", table.stem()));
        let dst = dir.join(format!("{}.csv", table.stem()));
        let result = std::fs::read_to_string(&src)
            .map_err(|e| e.to_string())
            .and_then(|text| parse_shorthand_file(&text).map_err(|e| e.to_string()))
            .and_then(|records| {
                let file = std::fs::File::create(&dst).map_err(|e| e.to_string())?;
                write_csv(&records, file).map_err(|e| e.to_string())?;
                Ok(records.len())
            });
        match result {
            Ok(count) => println!("{}: {count} vectors", dst.display()),
            Err(e) => {
                eprintln!("{}: {e}", src.display());
                return ExitCode::FAILURE;
            }
        }
    }
    ExitCode::SUCCESS
}
