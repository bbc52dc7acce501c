# domain/services/rop_service.py
from domain.utils.result import Result
from domain.errors import GroupTheoryError
from typing import Callable, Tuple, Type, TypeVar

T = TypeVar('T')
U = TypeVar('U')


class ROPService:
    """Railway Oriented Programming Service"""

    @staticmethod
    def pipeline(*functions: Callable) -> Callable:
        """Chain multiple Result-returning functions; the first error short-circuits"""
        def pipeline_func(input_value):
            result = Result.success(input_value)
            for func in functions:
                result = result.bind(func)
            return result
        return pipeline_func

    @staticmethod
    def try_catch(
        func: Callable[..., U],
        errors: Tuple[Type[Exception], ...] = (GroupTheoryError,),
    ) -> Callable[..., Result[U, str]]:
        """Wrap function to return Result instead of raising the given errors.

        Only the listed exception types become Result errors; anything else
        is a programming error and propagates.
        """
        def wrapper(*args, **kwargs) -> Result[U, str]:
            try:
                return Result.success(func(*args, **kwargs))
            except errors as e:
                return Result.error(f"{type(e).__name__}: {e}")
        return wrapper

    @staticmethod
    def validate(validator: Callable[[T], bool], error_msg: str) -> Callable[[T], Result[T, str]]:
        """Create validation function"""
        def validator_func(value: T) -> Result[T, str]:
            if validator(value):
                return Result.success(value)
            return Result.error(error_msg)
        return validator_func
