use super::GamePosition;

/// A single Nim pile `*size`, optionally with extra options beyond the
/// smaller piles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NimPile {
    pub size: u64,
    pub extra_options: Vec<NimPile>,
}

impl NimPile {
    pub fn new(size: u64) -> Self {
        NimPile {
            size,
            extra_options: Vec::new(),
        }
    }

    pub fn with_extra_options(size: u64, extra_options: Vec<NimPile>) -> Self {
        NimPile {
            size,
            extra_options,
        }
    }
}

impl GamePosition for NimPile {
    fn canonical_key(&self) -> String {
        if self.extra_options.is_empty() {
            return format!("nim:{}", self.size);
        }
        let mut extra: Vec<String> = self.extra_options.iter().map(|e| e.canonical_key()).collect();
        extra.sort();
        format!("nim:{}[{}]", self.size, extra.join(";"))
    }

    fn options(&self) -> Vec<Self> {
        (0..self.size)
            .map(NimPile::new)
            .chain(self.extra_options.iter().cloned())
            .collect()
    }

    fn is_terminal(&self) -> bool {
        self.size == 0 && self.extra_options.is_empty()
    }
}
