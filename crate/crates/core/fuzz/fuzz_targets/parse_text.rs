#![no_main]

use libfuzzer_sys::fuzz_target;

// The text parser must never panic, and anything it accepts must survive a
// serialize/reparse round trip unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(family) = unionclosed::parse_family(text) {
        let out = unionclosed::serialize_family(&family);
        let back = unionclosed::parse_family(&out).expect("serializer output parses");
        assert_eq!(back, family);
        assert_eq!(unionclosed::serialize_family(&back), out);
    }
});
