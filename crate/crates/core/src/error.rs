use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("product would have {requested} vertices, above the cap of {cap}")]
    SizeCap { requested: usize, cap: usize },
    #[error("budget {budget} exceeded (limit {limit})")]
    Budget { budget: &'static str, limit: u128 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
