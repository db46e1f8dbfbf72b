use std::path::Path;

use serde::Deserialize;

/// Optional TOML file mirroring the command-line flags. Flags win over the
/// file; the file wins over built-in defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub jobs: Option<usize>,
    pub field: Option<String>,
    pub budget: Option<u64>,
    pub skip_oracle: Option<bool>,
    pub vertex_cap: Option<usize>,
    pub json: Option<bool>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub max_vertices: Option<usize>,
    pub instance: Option<InstanceConfig>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub s1: Option<usize>,
    pub t1: Option<usize>,
    pub s2: Option<usize>,
    pub t2: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let c: Config = toml::from_str(
            "jobs = 2\nfield = \"GF(101)\"\nbudget = 10\nskip_oracle = true\nvertex_cap = 30\njson = true\n\
             seed = 5\ncount = 7\nmax_vertices = 6\n[instance]\nm = 2\nn = 3\ns1 = 2\nt1 = 2\ns2 = 2\nt2 = 3\n",
        )
        .unwrap();
        assert_eq!(c.jobs, Some(2));
        assert_eq!(c.instance.unwrap().t2, Some(3));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(toml::from_str::<Config>("threads = 2").is_err());
    }
}
