pub mod pv_oracle;
