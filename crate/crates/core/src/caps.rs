//! Resource caps for the potentially explosive enumerations.
//!
//! All caps can be overridden at runtime through the `DFILAB_CAPS`
//! environment variable, a comma-separated list of `key=value` pairs with
//! keys `lattice`, `oracle`, `chains`, `gbsteps`, e.g.
//! `DFILAB_CAPS="lattice=5000,gbsteps=1000000"`.

/// Limits applied to lattice closure, oracle size, chain enumeration and
/// Groebner reduction work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements allowed in an lcm lattice.
    pub lattice_elements: usize,
    /// Maximum number of generators accepted by the Taylor-complex oracle.
    pub oracle_generators: usize,
    /// Maximum number of chains enumerated for a single order complex.
    pub chain_faces: usize,
    /// Maximum number of elementary reduction steps across one Groebner run.
    pub gb_steps: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice_elements: 50_000,
            oracle_generators: 12,
            chain_faces: 2_000_000,
            gb_steps: 50_000_000,
        }
    }
}

impl Caps {
    /// Environment variable consulted by [`Caps::from_env`].
    pub const ENV_VAR: &'static str = "DFILAB_CAPS";

    /// Default caps overridden by any pairs present in `DFILAB_CAPS`.
    /// Unknown keys and malformed pairs are reported as errors so typos do
    /// not silently run with defaults.
    pub fn from_env() -> crate::Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Parse a `key=value,key=value` override string.
    pub fn parse(spec: &str) -> crate::Result<Self> {
        let mut caps = Self::default();
        for pair in spec.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = pair.split_once('=').ok_or_else(|| {
                crate::Error::InvalidInput(format!("malformed caps entry `{pair}`"))
            })?;
            let value: u64 = value.trim().parse().map_err(|_| {
                crate::Error::InvalidInput(format!("caps value in `{pair}` is not a number"))
            })?;
            match key.trim() {
                "lattice" => caps.lattice_elements = value as usize,
                "oracle" => caps.oracle_generators = value as usize,
                "chains" => caps.chain_faces = value as usize,
                "gbsteps" => caps.gb_steps = value,
                other => {
                    return Err(crate::Error::InvalidInput(format!(
                        "unknown caps key `{other}`"
                    )))
                }
            }
        }
        Ok(caps)
    }
}
