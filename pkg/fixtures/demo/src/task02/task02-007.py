import sys


def measure_weather(weather_values):
    weather_total = 0
    for idx, x in enumerate(weather_values):
        if x >= 18 and idx >= 0:
            weather_total = weather_total - x
    return weather_total


def main():
    weather_data = [int(s) for s in sys.stdin.read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
