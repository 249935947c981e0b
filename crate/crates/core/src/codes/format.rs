//! Text formats that produce a [`GaussCode`], selectable by name.

use super::{parse_gauss, parse_pd, CodeError, GaussCode};

pub trait CodeFormat: Send + Sync {
    fn name(&self) -> &'static str;

    /// Cheap syntactic check used when no format is named.
    fn claims(&self, text: &str) -> bool;

    fn parse(&self, text: &str) -> Result<GaussCode, CodeError>;
}

pub struct GaussFormat;

impl CodeFormat for GaussFormat {
    fn name(&self) -> &'static str {
        "gauss"
    }

    fn claims(&self, text: &str) -> bool {
        text.trim_start().starts_with(['O', 'o', 'U', 'u'])
    }

    fn parse(&self, text: &str) -> Result<GaussCode, CodeError> {
        parse_gauss(text)
    }
}

pub struct PdFormat;

impl CodeFormat for PdFormat {
    fn name(&self) -> &'static str {
        "pd"
    }

    fn claims(&self, text: &str) -> bool {
        text.trim_start().starts_with("PD")
    }

    fn parse(&self, text: &str) -> Result<GaussCode, CodeError> {
        parse_pd(text)
    }
}

/// Ordered set of formats. Auto-detection tries them in registration order.
pub struct FormatRegistry {
    formats: Vec<Box<dyn CodeFormat>>,
}

impl Default for FormatRegistry {
    fn default() -> Self {
        let mut reg = FormatRegistry { formats: Vec::new() };
        reg.register(Box::new(GaussFormat));
        reg.register(Box::new(PdFormat));
        reg
    }
}

impl FormatRegistry {
    pub fn empty() -> Self {
        FormatRegistry { formats: Vec::new() }
    }

    /// Adds a format; a later registration with the same name replaces the
    /// earlier one in place.
    pub fn register(&mut self, format: Box<dyn CodeFormat>) {
        if let Some(slot) = self.formats.iter_mut().find(|f| f.name() == format.name()) {
            *slot = format;
        } else {
            self.formats.push(format);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.formats.iter().map(|f| f.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn CodeFormat> {
        self.formats.iter().find(|f| f.name() == name).map(|f| f.as_ref())
    }

    /// Parses with the first format that claims the text. If none claims it,
    /// the first registered format's error is returned.
    pub fn parse_auto(&self, text: &str) -> Result<GaussCode, CodeError> {
        let format = self
            .formats
            .iter()
            .find(|f| f.claims(text))
            .or_else(|| self.formats.first())
            .ok_or_else(|| CodeError::BadParameter("no code formats registered".into()))?;
        format.parse(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detect() {
        let reg = FormatRegistry::default();
        assert_eq!(reg.names(), vec!["gauss", "pd"]);
        let a = reg.parse_auto("O1U2O3U1O2U3").unwrap();
        let b = reg.parse_auto("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(a.crossing_count(), b.crossing_count());
        assert!(matches!(reg.parse_auto("Z9"), Err(CodeError::MalformedToken(_))));
    }

    #[test]
    fn lookup_by_name() {
        let reg = FormatRegistry::default();
        assert!(reg.get("pd").unwrap().parse("PD[X[1,1,2,2]]").is_ok());
        assert!(reg.get("dt").is_none());
    }

    #[test]
    fn replace_and_empty() {
        struct Shouty;
        impl CodeFormat for Shouty {
            fn name(&self) -> &'static str {
                "gauss"
            }
            fn claims(&self, _: &str) -> bool {
                true
            }
            fn parse(&self, _: &str) -> Result<GaussCode, CodeError> {
                Ok(GaussCode::kink_unknot())
            }
        }
        let mut reg = FormatRegistry::default();
        reg.register(Box::new(Shouty));
        assert_eq!(reg.names(), vec!["gauss", "pd"]);
        assert_eq!(reg.parse_auto("anything").unwrap(), GaussCode::kink_unknot());
        assert!(FormatRegistry::empty().parse_auto("O1U1").is_err());
    }
}
