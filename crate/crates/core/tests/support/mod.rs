pub mod oracle;
pub mod ideals;
