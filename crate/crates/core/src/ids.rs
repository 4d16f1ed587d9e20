use alloc::string::String;
use core::borrow::Borrow;
use core::fmt;

/// Separator between edge ids in the canonical id of a realized path.
pub const PATH_SEPARATOR: char = '*';

macro_rules! symbol {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(String);

        impl $name {
            /// Wraps a name.
            pub fn new(name: impl Into<String>) -> Self {
                $name(name.into())
            }

            /// The underlying name.
            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.into())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

symbol!(
    /// A point of the 0-skeleton.
    StateId
);
symbol!(
    /// Identifier of an attached directed interval.
    EdgeId
);
symbol!(
    /// Identifier of a 2-globe.
    SquareId
);
symbol!(
    /// Identifier of an execution path of a flow.
    ///
    /// Realized flows use the edge ids of the path joined by
    /// [`PATH_SEPARATOR`].
    PathId
);
