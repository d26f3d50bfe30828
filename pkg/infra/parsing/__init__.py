from infra.parsing.expression_parser import ExpressionParser, parse_expression, parse_point

__all__ = ['ExpressionParser', 'parse_expression', 'parse_point']
