pub mod oracle;
pub mod sampling;
