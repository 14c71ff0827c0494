pub mod ext_oracle;
