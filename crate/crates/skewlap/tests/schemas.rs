//! Validates every JSON output of the CLI against the schemas shipped under
//! `schemas/v1/`. The checker covers the draft-07 subset those schemas use:
//! `type` (including type arrays), `required`, `properties`,
//! `additionalProperties`, `items`, `enum`, and `minimum`.

use serde_json::Value;

fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(types) = schema.get("type") {
        let names: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str()).collect(),
            _ => return Err(format!("{path}: malformed type keyword")),
        };
        let matches = names.iter().any(|name| match *name {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            "number" => value.is_number(),
            "integer" => value.is_i64() || value.is_u64(),
            other => panic!("unsupported type keyword {other}"),
        });
        if !matches {
            return Err(format!("{path}: expected {names:?}, got {value}"));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in {allowed:?}"));
        }
    }
    if let Some(minimum) = schema.get("minimum").and_then(Value::as_f64) {
        if let Some(number) = value.as_f64() {
            if number < minimum {
                return Err(format!("{path}: {number} below minimum {minimum}"));
            }
        }
    }
    if let Some(object) = value.as_object() {
        let properties = schema.get("properties").and_then(Value::as_object);
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !object.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
        for (key, item) in object {
            let sub = properties.and_then(|p| p.get(key));
            match sub {
                Some(subschema) => validate(subschema, item, &format!("{path}.{key}"))?,
                None => {
                    if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                        return Err(format!("{path}: unexpected key {key}"));
                    }
                }
            }
        }
    }
    if let (Some(items), Some(array)) = (schema.get("items"), value.as_array()) {
        for (i, item) in array.iter().enumerate() {
            validate(items, item, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn load_schema(name: &str) -> Value {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas/v1")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap_or_else(|e| {
        panic!("schema {path:?}: {e}");
    }))
    .expect("schema parses")
}

fn cli_json(args: &[&str], stdin_file: Option<&str>) -> Value {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full: Vec<String> = vec!["skewlap".into()];
    full.extend(args.iter().map(|s| s.to_string()));
    if let Some(path) = stdin_file {
        full.insert(2, path.to_string());
    }
    let status = skewlap::cli::run(full, &mut out, &mut err);
    assert_eq!(status, 0, "stderr: {}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).expect("CLI emits valid JSON")
}

#[test]
fn cli_json_outputs_validate_against_their_schemas() {
    let dir = std::env::temp_dir().join("skewlap-schema-test");
    std::fs::create_dir_all(&dir).unwrap();
    let inputs = [
        ("p4.txt", "4 3\n1 2\n2 3\n3 4\n"),
        ("c4.txt", "4 4\n1 2\n2 3\n3 4\n4 1\n"),
        ("single.txt", "1 0\n"),
        ("g2.txt", "7 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n"),
    ];
    let matrix_schema = load_schema("matrix.schema.json");
    let spectrum_schema = load_schema("spectrum.schema.json");
    let energy_schema = load_schema("energy.schema.json");
    let bounds_schema = load_schema("bounds.schema.json");
    for (name, text) in inputs {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let path = path.to_str().unwrap();
        for kind in ["slnew", "s", "l", "sl"] {
            let value = cli_json(
                &["matrix", path, "--matrix", kind, "--format", "json"],
                None,
            );
            validate(&matrix_schema, &value, "matrix").unwrap();
            let value = cli_json(
                &["spectrum", path, "--matrix", kind, "--format", "json"],
                None,
            );
            validate(&spectrum_schema, &value, "spectrum").unwrap();
        }
        let value = cli_json(&["energy", path, "--format", "json"], None);
        validate(&energy_schema, &value, "energy").unwrap();
        let value = cli_json(&["bounds", path, "--format", "json"], None);
        validate(&bounds_schema, &value, "bounds").unwrap();
    }
}

#[test]
fn verify_json_validates_against_sweep_schema() {
    let schema = load_schema("sweep.schema.json");
    let value = cli_json(&["verify", "--exhaustive", "3"], None);
    validate(&schema, &value, "sweep").unwrap();
    let value = cli_json(
        &[
            "verify", "--random", "25", "--n", "6", "--seed", "7", "--tol", "1e-7",
        ],
        None,
    );
    validate(&schema, &value, "sweep").unwrap();
}
