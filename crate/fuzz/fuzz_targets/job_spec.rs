#![no_main]

use libfuzzer_sys::fuzz_target;
use tower_cli::JobSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(job) = JobSpec::from_json_str(s) {
        let printed = serde_json::to_string(&job).expect("jobs serialize");
        assert_eq!(JobSpec::from_json_str(&printed).expect("printed jobs parse"), job);
    }
});
