#![no_main]

use std::sync::{Arc, OnceLock};

use libfuzzer_sys::fuzz_target;
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::tower::Tower;

fn towers() -> &'static [Tower; 2] {
    static TOWERS: OnceLock<[Tower; 2]> = OnceLock::new();
    TOWERS.get_or_init(|| {
        [Tower::new(Arc::new(PermTower::hecke()), 3), Tower::new(Arc::new(DiagramTower::brauer()), 2)]
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    for (t, level) in towers().iter().zip([3, 2]) {
        let alg = t.algebra(level);
        if let Ok(x) = alg.from_json(&v) {
            assert_eq!(alg.from_json(&alg.to_json(&x)).expect("printed elements parse"), x);
        }
    }
});
