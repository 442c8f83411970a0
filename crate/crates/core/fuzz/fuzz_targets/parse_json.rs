#![no_main]

use libfuzzer_sys::fuzz_target;

// Same contract as the text target, for the JSON form.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(family) = unionclosed::family_from_json(text) {
        let out = unionclosed::family_to_json(&family);
        let back = unionclosed::family_from_json(&out).expect("serializer output parses");
        assert_eq!(back, family);
        assert_eq!(unionclosed::family_to_json(&back), out);
    }
});
